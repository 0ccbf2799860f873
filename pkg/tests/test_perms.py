import itertools

import pytest

from dpjordan.errors import CapExceeded, DegreeMismatch, GroupError, NotInGroup, SpecError
from dpjordan.perms import (GroupHom, PermGroup, Permutation, alternating_group, are_conjugate,
                            center, centralizer, conjugacy_class, conjugacy_classes, cyclic_group,
                            dihedral_group, direct_product, element_order, generate, is_normal,
                            normal_subgroups, normalizer, semidirect_product, subgroup_generated,
                            subgroups, swap_wreath, symmetric_group)

from conftest import naive_subgroups


def P(n, text):
    return Permutation.parse(n, text)


def test_composition_is_right_to_left():
    a = P(3, "(1 2)")
    b = P(3, "(2 3)")
    # (a*b)(i) = a(b(i)): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    assert (a * b)(0) == 1 and (a * b)(1) == 2 and (a * b)(2) == 0
    assert str(a * b) == "(1 2 3)"


def test_parse_and_print_round_trip():
    p = P(7, "(1 4 2)(5 7)")
    assert str(p) == "(1 4 2)(5 7)"
    assert P(7, str(p)) == p
    assert str(Permutation.identity(4)) == "()"
    assert p.cycle_type() == (3, 2)
    assert element_order(p) == 6


@pytest.mark.parametrize("bad", ["(1 1)", "(0 2)", "(1 9)", "(1 2", "1 2)", "(a b)"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(SpecError):
        P(5, bad)


def test_permutation_validation():
    with pytest.raises(GroupError):
        Permutation([0, 0, 1])
    with pytest.raises(DegreeMismatch):
        P(3, "(1 2)") * P(4, "(1 2)")


def test_powers_and_inverse():
    p = P(5, "(1 2 3 4 5)")
    assert p ** 5 == Permutation.identity(5)
    assert p ** -1 == p.inverse()
    assert (p * p.inverse()).is_identity()


def test_named_group_orders():
    assert symmetric_group(5).order == 120
    assert alternating_group(5).order == 60
    assert cyclic_group(12).order == 12
    assert dihedral_group(6).order == 12
    assert symmetric_group(1).order == 1
    assert generate(4, []).order == 1


def test_element_cap():
    G = PermGroup(8, symmetric_group(8).generators, element_cap=1000)
    with pytest.raises(CapExceeded):
        G.order


def test_conjugacy_in_a5_matches_brute_force():
    A5 = alternating_group(5)
    elems = A5.elements
    a = P(5, "(1 2 3 4 5)")
    b = P(5, "(1 3 5 2 4)")
    c = P(5, "(1 2 3 5 4)")
    for x, y in [(a, b), (a, c), (b, c)]:
        brute = any(x.conjugate(g) == y for g in elems)
        assert are_conjugate(A5, x, y) == brute
    # in A5 a 5-cycle is conjugate to its inverse but not to its square
    assert are_conjugate(A5, a, a.inverse())
    assert not are_conjugate(A5, a, a * a)
    sizes = sorted(len(c) for c in conjugacy_classes(A5))
    assert sizes == [1, 12, 12, 15, 20]


def test_conjugacy_classes_partition_s4():
    S4 = symmetric_group(4)
    classes = conjugacy_classes(S4)
    flat = [g for c in classes for g in c]
    assert len(flat) == len(set(flat)) == 24
    assert sorted(len(c) for c in classes) == [1, 3, 6, 6, 8]


def test_sylow5_normalizer_in_s5():
    S5 = symmetric_group(5)
    C5 = subgroup_generated(S5, [P(5, "(1 2 3 4 5)")])
    N = normalizer(S5, C5)
    brute = [g for g in S5.elements if all(h.conjugate(g) in C5 for h in C5.elements)]
    assert N.order == len(brute) == 20
    assert centralizer(S5, C5.generators).order == 5


def test_center():
    assert center(dihedral_group(6)).order == 2
    assert center(symmetric_group(4)).order == 1
    assert center(cyclic_group(7)).order == 7


def test_subgroups_match_naive_enumeration():
    for G in (symmetric_group(4), dihedral_group(4), direct_product(cyclic_group(2), cyclic_group(4))):
        got = {H.element_set for H in subgroups(G)}
        assert got == naive_subgroups(G.elements)
    assert len(subgroups(symmetric_group(4))) == 30


def test_subgroups_closed_under_conjugation_and_normal_ones_are_subgroups():
    G = symmetric_group(4)
    subs = {H.element_set for H in subgroups(G)}
    for H in subs:
        for g in G.generators:
            assert frozenset(h.conjugate(g) for h in H) in subs
    normals = normal_subgroups(G)
    assert sorted(N.order for N in normals) == [1, 4, 12, 24]
    assert all(N.element_set in subs and is_normal(G, N) for N in normals)


def test_normal_subgroups_a5_simple():
    assert sorted(N.order for N in normal_subgroups(alternating_group(5))) == [1, 60]


def test_direct_and_semidirect_products():
    C3 = cyclic_group(3)
    C2 = cyclic_group(2)
    D = direct_product(C3, C2)
    assert D.order == 6 and D.is_abelian()
    h = C2.generators[0]
    trivial = semidirect_product(C3, C2, {h: Permutation.identity(3)})
    assert trivial == D
    inv = P(3, "(2 3)")
    S3 = semidirect_product(C3, C2, {h: inv})
    assert S3.order == 6 and not S3.is_abelian()
    with pytest.raises(GroupError):
        semidirect_product(C3, C2, {P(2, "()"): inv})


def test_semidirect_rejects_non_normalizing_conjugator():
    N = generate(4, [P(4, "(1 2)")])
    H = cyclic_group(2)
    with pytest.raises(GroupError):
        semidirect_product(N, H, {H.generators[0]: P(4, "(2 3)")})


def test_swap_wreath():
    W = swap_wreath(cyclic_group(3))
    assert W.order == 18
    assert swap_wreath(alternating_group(5)).degree == 10


def test_group_hom_sign():
    S4 = symmetric_group(4)
    sign = {g: (P(2, "(1 2)") if sum(len(c) - 1 for c in g.cycles()) % 2 else Permutation.identity(2))
            for g in S4.generators}
    f = GroupHom(S4, sign)
    assert f.kernel().order == 12
    assert f.image().order == 2
    with pytest.raises(NotInGroup):
        f(P(5, "(1 2)"))


def test_group_hom_rejects_non_homomorphism():
    C4 = cyclic_group(4)
    with pytest.raises(GroupError):
        GroupHom(C4, {C4.generators[0]: P(3, "(1 2 3)")})


def test_conjugacy_class_requires_membership():
    with pytest.raises(NotInGroup):
        conjugacy_class(alternating_group(4), P(4, "(1 2)"))


def test_all_permutations_of_s3_generated():
    S3 = symmetric_group(3)
    assert set(S3.elements) == {Permutation(p) for p in itertools.permutations(range(3))}
