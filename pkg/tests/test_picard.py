import itertools

import numpy as np
import pytest

from dpjordan.errors import GroupError
from dpjordan.perms import Permutation
from dpjordan.picard import (PicClass, blowup_config, canonical_class, config_for_degree,
                             exceptional_class, extend_automorphism, graph_automorphisms,
                             hexagon_structure_check, hyperplane_class, intersection,
                             preserves_gram)

LINE_COUNTS = {0: 0, 1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27}


def box_lines(r):
    """Lines found by brute force in a box well past the Cauchy-Schwarz bound."""
    if r == 0:
        return set()
    grid = np.array(list(itertools.product(range(-2, 4), repeat=r)))
    out = set()
    for h in range(0, 5):
        self_int = h * h - (grid ** 2).sum(axis=1)
        k_int = -3 * h + grid.sum(axis=1)
        for row in grid[(self_int == -1) & (k_int == -1)]:
            out.add((h, tuple(int(x) for x in row)))
    return out


@pytest.mark.parametrize("r", range(7))
def test_line_counts_against_box_search(r):
    cfg = blowup_config(r)
    assert len(cfg.names) == LINE_COUNTS[r]
    assert {(c.h, c.m) for c in cfg.lines} == box_lines(r)


def test_intersection_form():
    H = hyperplane_class(3)
    E1 = exceptional_class(3, 1)
    K = canonical_class(3)
    assert intersection(H, H) == 1
    assert intersection(E1, E1) == -1
    assert intersection(H, E1) == 0
    assert intersection(K, K) == 6
    assert (H - E1).dot(H - E1) == 0
    assert K == H.scale(-3) + E1 + exceptional_class(3, 2) + exceptional_class(3, 3)


def test_gram_matrix_matches_classes():
    cfg = blowup_config(5)
    G = cfg.gram_matrix()
    assert G.shape == (16, 16)
    assert (np.diag(G) == -1).all()
    assert (G == G.T).all()
    assert all(G[i, j] == cfg.lines[i].dot(cfg.lines[j]) for i in range(16) for j in range(16))
    # every one of the 16 lines meets exactly five others
    assert ((G == 1).sum(axis=1) == 5).all()


def test_names():
    assert blowup_config(5).names == ("E1", "E2", "E3", "E4", "E5", "L12", "L13", "L14", "L15", "L23",
                                      "L24", "L25", "L34", "L35", "L45", "Q")
    names6 = blowup_config(6).names
    assert len(names6) == 27 and "Q23456" in names6 and "L56" in names6
    assert config_for_degree(9).names == ()


def test_q_meets_exceptional_not_lines():
    cfg = blowup_config(5)
    q = cfg.lines[cfg.index("Q")]
    assert all(q.dot(cfg.lines[cfg.index(f"E{i}")]) == 1 for i in range(1, 6))
    assert all(q.dot(cfg.lines[i]) == 0 for i, n in enumerate(cfg.names) if n.startswith("L"))


def test_out_of_range():
    with pytest.raises(GroupError):
        blowup_config(7)


def test_hexagon_automorphisms_brute_force():
    cfg = blowup_config(3)
    g = cfg.graph()
    assert g.is_cycle()
    brute = [p for p in itertools.permutations(range(6)) if preserves_gram(cfg, p)]
    A = graph_automorphisms(g)
    assert A.order == len(brute) == 12
    assert set(A.elements) == {Permutation(p) for p in brute}
    ok, sigma = hexagon_structure_check(A)
    assert ok and sigma is not None


@pytest.mark.parametrize("r, order", [(4, 120), (5, 1920), (6, 51840)])
def test_weyl_orders(r, order):
    assert graph_automorphisms(blowup_config(r).graph()).order == order


def test_extend_automorphism_all_and_first():
    g = blowup_config(3).graph()
    assert len(extend_automorphism(g, {}, limit=0)) == 12
    assert len(extend_automorphism(g, {0: 1}, limit=0)) == 2
    assert len(extend_automorphism(g, {0: 0, 3: 3}, limit=0)) == 1
    # E1 and L23 are antipodal, so the reflection through them survives
    assert len(extend_automorphism(g, {0: 0, 5: 5}, limit=0)) == 2


def test_empty_graph_rejected():
    with pytest.raises(GroupError):
        graph_automorphisms(config_for_degree(9).graph())


def test_picclass_arithmetic():
    a = PicClass(1, (1, 0))
    b = PicClass(0, (-1, 0))
    assert a + b == PicClass(1, (0, 0))
    assert -(a - b) == b - a
