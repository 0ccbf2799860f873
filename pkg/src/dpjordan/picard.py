"""Picard lattices of blow-ups of the plane, their lines, and line graphs.

A class ``h*H - sum(m_i * E_i)`` is stored as ``PicClass(h, m)``; with this
sign convention the exceptional curve over the i-th point is
``PicClass(0, -e_i)`` and the canonical class is ``PicClass(-3, (-1,)*r)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import GroupError
from .perms import PermGroup, Permutation

MAX_POINTS = 6


@dataclass(frozen=True)
class PicClass:
    h: int
    m: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.m)

    def dot(self, other: PicClass) -> int:
        return intersection(self, other)

    def __add__(self, other):
        if other.rank != self.rank:
            raise GroupError("rank mismatch")
        return PicClass(self.h + other.h, tuple(a + b for a, b in zip(self.m, other.m)))

    def __neg__(self):
        return PicClass(-self.h, tuple(-a for a in self.m))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> PicClass:
        return PicClass(k * self.h, tuple(k * a for a in self.m))


def intersection(a: PicClass, b: PicClass) -> int:
    if a.rank != b.rank:
        raise GroupError(f"rank mismatch: {a.rank} vs {b.rank}")
    return a.h * b.h - sum(x * y for x, y in zip(a.m, b.m))


def canonical_class(r: int) -> PicClass:
    return PicClass(-3, (-1,) * r)


def hyperplane_class(r: int) -> PicClass:
    return PicClass(1, (0,) * r)


def exceptional_class(r: int, i: int) -> PicClass:
    """Class of E_i, with i 1-indexed."""
    return PicClass(0, tuple(-1 if j == i - 1 else 0 for j in range(r)))


@dataclass(frozen=True)
class LineConfig:
    degree: int
    names: tuple[str, ...]
    lines: tuple[PicClass, ...]
    gram: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return 9 - self.degree

    def index(self, name: str) -> int:
        return self.names.index(name)

    def gram_matrix(self) -> np.ndarray:
        return np.array(self.gram, dtype=int).reshape(len(self.names), len(self.names))

    def graph(self) -> LineGraph:
        n = len(self.names)
        adj = tuple(tuple(i != j and self.gram[i][j] == 1 for j in range(n)) for i in range(n))
        return LineGraph(self.names, adj)


@dataclass(frozen=True)
class LineGraph:
    vertices: tuple[str, ...]
    adjacency: tuple[tuple[bool, ...], ...]

    def edges(self) -> list[tuple[str, str]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[j])
                for i in range(n) for j in range(i + 1, n) if self.adjacency[i][j]]

    def neighbors(self, i) -> set[int]:
        return {j for j, a in enumerate(self.adjacency[i]) if a}

    def is_cycle(self) -> bool:
        """Connected and 2-regular."""
        n = len(self.vertices)
        if n < 3 or any(len(self.neighbors(i)) != 2 for i in range(n)):
            return False
        seen = {0}
        stack = [0]
        while stack:
            for j in self.neighbors(stack.pop()):
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n


def _h_bound(r: int) -> int:
    # sum(m) = 3h - 1 and sum(m^2) = h^2 + 1, so Cauchy-Schwarz gives
    # (3h - 1)^2 <= r (h^2 + 1)
    return max(h for h in range(0, 10) if (3 * h - 1) ** 2 <= r * (h * h + 1)) if r else 0


def _line_name(c: PicClass) -> str:
    r = c.rank
    if c.h == 0:
        (i,) = [j for j, x in enumerate(c.m) if x == -1]
        return f"E{i + 1}"
    if c.h == 1:
        return "L" + "".join(str(j + 1) for j, x in enumerate(c.m) if x == 1)
    through = [j + 1 for j, x in enumerate(c.m) if x == 1]
    if len(through) == r:
        return "Q"
    return "Q" + "".join(map(str, through))


def blowup_config(r: int) -> LineConfig:
    """All (-1)-classes on the blow-up of the plane at r general points.

    Lines are ordered E_i ascending, then L_ij lexicographically, then conic
    classes Q.
    """
    if not 0 <= r <= MAX_POINTS:
        raise GroupError(f"number of points must be in 0..{MAX_POINTS}, got {r}")
    hmax = _h_bound(r)
    assert hmax <= 2, hmax
    K = canonical_class(r)
    found = []
    for h in range(0, hmax + 1):
        bound = math.isqrt(h * h + 1)
        for m in itertools.product(range(-bound, bound + 1), repeat=r):
            c = PicClass(h, m)
            if intersection(c, c) == -1 and intersection(c, K) == -1:
                found.append(c)
    # h = 0 solutions are the E_i; order them by index
    exc = sorted((c for c in found if c.h == 0), key=lambda c: c.m.index(-1))
    rest = sorted((c for c in found if c.h > 0),
                  key=lambda c: (c.h, [j for j, x in enumerate(c.m) if x > 0]) if c.h == 1
                  else (c.h, [j for j, x in enumerate(c.m) if x == 0]))
    lines = tuple(exc + rest)
    names = tuple(_line_name(c) for c in lines)
    gram = tuple(tuple(intersection(a, b) for b in lines) for a in lines)
    return LineConfig(9 - r, names, lines, gram)


def config_for_degree(d: int) -> LineConfig:
    return blowup_config(9 - d)


def extend_automorphism(graph: LineGraph, partial: dict[int, int], *, limit: int = 1) -> list[tuple[int, ...]]:
    """Graph automorphisms extending ``partial``, found by backtracking.

    Vertices are assigned in index order; a candidate image must have the
    same degree and the same adjacency to every vertex already assigned.
    Stops after ``limit`` solutions (``limit=0`` means all).
    """
    n = len(graph.vertices)
    adj = graph.adjacency
    deg = [sum(row) for row in adj]
    for u, v in partial.items():
        if deg[u] != deg[v]:
            return []
    for (u, v), (x, y) in itertools.product(partial.items(), repeat=2):
        if adj[u][x] != adj[v][y]:
            return []
    if len(set(partial.values())) != len(partial):
        return []
    order = [v for v in range(n) if v not in partial]
    images = dict(partial)
    used = set(partial.values())
    out = []

    def search(k):
        if k == len(order):
            out.append(tuple(images[v] for v in range(n)))
            return limit and len(out) >= limit
        v = order[k]
        for w in range(n):
            if w in used or deg[w] != deg[v]:
                continue
            if all(adj[v][u] == adj[w][iu] for u, iu in images.items()):
                images[v] = w
                used.add(w)
                if search(k + 1):
                    return True
                del images[v]
                used.discard(w)
        return False

    search(0)
    return out


def _orbit(point, gens):
    orbit = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


def graph_automorphisms(graph: LineGraph) -> PermGroup:
    """Full automorphism group of the graph, on the vertex list.

    Walks the base 0, 1, 2, ...: at each level the orbit of the next base
    point under the pointwise stabilizer of the earlier ones is found by
    searching for one automorphism per new orbit point.  The group order is
    the product of these orbit lengths, so it is known without listing the
    elements.
    """
    n = len(graph.vertices)
    if n == 0:
        raise GroupError("graph has no vertices")
    gens = []
    order = 1
    for b in range(n):
        fixed = {i: i for i in range(b)}
        level = [g for g in gens if all(g[i] == i for i in range(b))]
        orbit = _orbit(b, level)
        for p in range(b + 1, n):
            if p in orbit:
                continue
            found = extend_automorphism(graph, {**fixed, b: p})
            if found:
                g = Permutation._raw(found[0])
                gens.append(g)
                level.append(g)
                orbit = _orbit(b, level)
        order *= len(orbit)
    return PermGroup(n, gens, order=order)


def preserves_gram(config: LineConfig, p) -> bool:
    g = config.gram
    n = len(g)
    return all(g[p[i]][p[j]] == g[i][j] for i in range(n) for j in range(n))


def hexagon_structure_check(G: PermGroup):
    """Certify G = S_3 x mu_2; returns ``(ok, sigma)``.

    ``sigma`` is a central involution admitting a nonabelian complement of
    order 6, or None when no such pair exists.
    """
    from .perms import center, element_order, subgroups

    if G.order != 12:
        return False, None
    Z = center(G)
    sixes = [H for H in subgroups(G) if H.order == 6 and not H.is_abelian()]
    for s in Z.elements:
        if element_order(s) != 2:
            continue
        for H in sixes:
            if s not in H:
                return True, s
    return False, None
