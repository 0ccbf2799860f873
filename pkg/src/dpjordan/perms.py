"""Permutations and permutation groups with fully materialized element sets.

Points are 0-indexed internally; every user-facing string uses 1-indexed
cycle notation.  Composition is functional: ``(p * q)(i) == p(q(i))``.

All groups handled here are small (a few thousand elements at most), so the
algorithms are the direct ones: orbit closure for generation, conjugation
orbits for classes, element filtering for centralizers and normalizers.
"""
from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Mapping, Sequence

from .errors import CapExceeded, DegreeMismatch, GroupError, NotInGroup, SpecError

ELEMENT_CAP = 20000
SUBGROUP_CAP = 512


def _compose(a, b):
    return tuple(map(a.__getitem__, b))


def _invert(a):
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


class Permutation(tuple):
    """A bijection of ``{0, ..., n-1}`` stored as its image sequence.

    Being a tuple, permutations hash and compare by images, and the natural
    tuple order is the canonical lexicographic order used for all sorting.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if not images:
            raise GroupError("degree 0 is not allowed")
        if sorted(images) != list(range(len(images))):
            raise GroupError(f"not a permutation: {images}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images):
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        if degree < 1:
            raise GroupError("degree 0 is not allowed")
        return cls._raw(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]], *, one_indexed=True) -> Permutation:
        images = list(range(degree))
        shift = 1 if one_indexed else 0
        seen = set()
        for cyc in cycles:
            pts = [c - shift for c in cyc]
            for p in pts:
                if not 0 <= p < degree:
                    raise GroupError(f"point {p + shift} outside degree {degree}")
                if p in seen:
                    raise GroupError(f"point {p + shift} repeated in cycle notation")
                seen.add(p)
            for k, p in enumerate(pts):
                images[p] = pts[(k + 1) % len(pts)]
        return cls._raw(images)

    @classmethod
    def parse(cls, degree: int, text: str) -> Permutation:
        """Parse 1-indexed cycle notation such as ``"(1 2 3)(4 5)"``.

        A product of overlapping cycles is evaluated right to left.
        """
        text = text.strip()
        if text in ("", "()", "e", "1"):
            return cls.identity(degree)
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))+", text):
            raise SpecError(f"bad cycle notation: {text!r}")
        result = cls.identity(degree)
        for body in re.findall(r"\(([^)]*)\)", text):
            pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            if len(pts) <= 1:
                if pts and not 1 <= pts[0] <= degree:
                    raise SpecError(f"point {pts[0]} outside degree {degree}")
                continue
            try:
                cyc = cls.from_cycles(degree, [pts])
            except GroupError as exc:
                raise SpecError(str(exc)) from None
            result = result * cyc
        return result

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return tuple.__getitem__(self, i)

    def __mul__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        if len(other) != len(self):
            raise DegreeMismatch(f"degrees {len(self)} and {len(other)} differ")
        return Permutation._raw(_compose(self, other))

    __rmul__ = None

    def __add__(self, other):
        return NotImplemented

    def inverse(self) -> Permutation:
        return Permutation._raw(_invert(self))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, by: Permutation) -> Permutation:
        """Return ``by * self * by^-1``."""
        return Permutation._raw(_compose(_compose(by, self), _invert(by)))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 0-indexed, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self)):
            if start in seen or self[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def support(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self) if i != x)

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({str(self)!r}, degree={len(self)})"


def element_order(g: Permutation) -> int:
    return reduce(math.lcm, (len(c) for c in g.cycles()), 1)


def _check_degree(degree, gens):
    if degree < 1:
        raise GroupError("degree 0 is not allowed")
    for g in gens:
        if len(g) != degree:
            raise DegreeMismatch(f"generator {g} has degree {len(g)}, expected {degree}")


def _closure(degree, gens, cap):
    """All products of ``gens`` as a set of plain tuples."""
    ident = tuple(range(degree))
    elements = {ident}
    gens = [tuple(g) for g in gens if not Permutation.is_identity(g)]
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for s in gens:
                y = _compose(x, s)
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        if len(elements) > cap:
            raise CapExceeded("group order", cap)
        frontier = new
    return elements


class PermGroup:
    """A finitely generated permutation group.

    The element set is computed lazily on first access and cached, sorted
    lexicographically.  ``order`` may be supplied when it is known from some
    other computation (e.g. a stabilizer chain), in which case asking for it
    does not force materialization.
    """

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = (), *,
                 element_cap: int = ELEMENT_CAP, order: int | None = None):
        gens = tuple(Permutation(g) if not isinstance(g, Permutation) else g for g in generators)
        _check_degree(degree, gens)
        self.degree = degree
        self.generators = gens
        self.element_cap = element_cap
        self._elements = None
        self._set = None
        self._order = order

    @classmethod
    def _from_elements(cls, degree, generators, elements, element_cap=ELEMENT_CAP):
        G = cls(degree, generators, element_cap=element_cap)
        G._set = frozenset(Permutation._raw(e) for e in elements)
        G._order = len(G._set)
        return G

    def _materialize(self):
        if self._set is None:
            raw = _closure(self.degree, self.generators, self.element_cap)
            self._set = frozenset(Permutation._raw(e) for e in raw)
            if self._order is not None and self._order != len(self._set):
                raise GroupError(f"declared order {self._order} but generated {len(self._set)}")
            self._order = len(self._set)

    @property
    def elements(self) -> tuple[Permutation, ...]:
        if self._elements is None:
            self._materialize()
            self._elements = tuple(sorted(self._set))
        return self._elements

    @property
    def element_set(self) -> frozenset[Permutation]:
        self._materialize()
        return self._set

    @property
    def order(self) -> int:
        if self._order is None:
            self._materialize()
        return self._order

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return len(g) == self.degree and g in self.element_set

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.element_set == other.element_set

    __hash__ = None

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[:i])

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.degree == other.degree and self.element_set <= other.element_set

    def exponent(self) -> int:
        return reduce(math.lcm, (element_order(g) for g in self.elements), 1)

    def __repr__(self):
        n = self._order if self._order is not None else "?"
        return f"PermGroup(degree={self.degree}, order={n})"


def generate(degree: int, gens: Iterable[Sequence[int]] = (), *, cap: int = ELEMENT_CAP) -> PermGroup:
    """Generate and materialize the group spanned by ``gens``."""
    G = PermGroup(degree, gens, element_cap=cap)
    G._materialize()
    return G


def subgroup_from_elements(G: PermGroup, elements: Iterable[Sequence[int]]) -> PermGroup:
    """Wrap a subset of G known to be a subgroup, picking a small generating set."""
    elements = sorted(set(Permutation._raw(e) for e in elements))
    gens = []
    current = {tuple(range(G.degree))}
    for x in elements:
        if x not in current:
            gens.append(x)
            current = _closure(G.degree, gens, G.element_cap)
    if len(current) != len(elements):
        raise GroupError("element set is not closed under multiplication")
    return PermGroup._from_elements(G.degree, gens, current, G.element_cap)


def subgroup_generated(G: PermGroup, gens: Iterable[Sequence[int]]) -> PermGroup:
    gens = [Permutation(g) for g in gens]
    for g in gens:
        if g not in G:
            raise NotInGroup(f"{g} is not in the group")
    H = PermGroup(G.degree, gens, element_cap=G.element_cap)
    H._materialize()
    return H


def _require_members(G, items):
    for s in items:
        if s not in G:
            raise NotInGroup(f"{s} is not in the group")


def conjugacy_class(G: PermGroup, g: Permutation) -> frozenset[Permutation]:
    _require_members(G, (g,))
    gens = [(tuple(s), _invert(s)) for s in G.generators]
    orbit = {tuple(g)}
    frontier = [tuple(g)]
    while frontier:
        new = []
        for x in frontier:
            for s, si in gens:
                y = _compose(_compose(s, x), si)
                if y not in orbit:
                    orbit.add(y)
                    new.append(y)
        frontier = new
    return frozenset(Permutation._raw(x) for x in orbit)


def conjugacy_classes(G: PermGroup) -> list[tuple[Permutation, ...]]:
    """Conjugacy classes sorted by (element order, class size, smallest member)."""
    seen = set()
    classes = []
    for g in G.elements:
        if g in seen:
            continue
        cls = conjugacy_class(G, g)
        seen |= cls
        classes.append(tuple(sorted(cls)))
    classes.sort(key=lambda c: (element_order(c[0]), len(c), c[0]))
    return classes


def are_conjugate(G: PermGroup, g: Permutation, h: Permutation) -> bool:
    _require_members(G, (g, h))
    if g == h:
        return True
    if g.cycle_type() != h.cycle_type():
        return False
    return h in conjugacy_class(G, g)


def centralizer(G: PermGroup, S: Iterable[Permutation]) -> PermGroup:
    S = list(S)
    _require_members(G, S)
    elems = [x for x in G.elements if all(x * s == s * x for s in S)]
    return subgroup_from_elements(G, elems)


def center(G: PermGroup) -> PermGroup:
    return centralizer(G, G.generators)


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    if not H.is_subgroup_of(G):
        raise NotInGroup("H is not a subgroup of G")
    Hset = H.element_set
    hgens = H.generators
    elems = [x for x in G.elements if all(h.conjugate(x) in Hset for h in hgens)]
    return subgroup_from_elements(G, elems)


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    Hset = H.element_set
    return all(h.conjugate(x) in Hset for x in G.generators for h in H.generators)


def subgroups(G: PermGroup, *, cap: int = SUBGROUP_CAP) -> list[PermGroup]:
    """All subgroups of G, sorted by (order, element list).

    Built by the cyclic-extension sweep: start from the cyclic subgroups and
    keep adjoining one outside element at a time until nothing new appears.
    """
    from .lattice import SubgroupLattice

    return SubgroupLattice(G, cap=cap).groups()


def _canonical_key(H: PermGroup):
    return (H.order, H.elements)


def normal_subgroups(G: PermGroup) -> list[PermGroup]:
    """All normal subgroups, as joins of normal closures of conjugacy classes."""
    closures = {}
    for cls in conjugacy_classes(G):
        if cls[0].is_identity():
            continue
        N = subgroup_from_elements(G, _closure(G.degree, _greedy_gens(G, cls), G.element_cap))
        closures.setdefault(N.element_set, N)
    trivial = PermGroup._from_elements(G.degree, (), [G.identity])
    found = {trivial.element_set: trivial, **closures}
    atoms = list(closures.values())
    queue = list(found.values())
    while queue:
        X = queue.pop()
        for C in atoms:
            if C.element_set <= X.element_set:
                continue
            J = subgroup_from_elements(G, _closure(G.degree, X.generators + C.generators, G.element_cap))
            if J.element_set not in found:
                found[J.element_set] = J
                queue.append(J)
    return sorted(found.values(), key=_canonical_key)


def _greedy_gens(G, items):
    """A subset of ``items`` generating the same subgroup as all of them."""
    gens = []
    current = {tuple(range(G.degree))}
    for x in items:
        if tuple(x) not in current:
            gens.append(x)
            current = _closure(G.degree, gens, G.element_cap)
    return gens


def _shift(p: Sequence[int], offset: int, degree: int) -> Permutation:
    images = list(range(degree))
    for i, x in enumerate(p):
        images[offset + i] = offset + x
    return Permutation._raw(images)


def direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    """A x B acting on the disjoint union of the two point sets."""
    n = A.degree + B.degree
    gens = [_shift(g, 0, n) for g in A.generators] + [_shift(g, A.degree, n) for g in B.generators]
    return PermGroup(n, gens, element_cap=max(A.element_cap, B.element_cap))


def semidirect_product(N: PermGroup, H: PermGroup,
                       action: Mapping[Permutation, Permutation]) -> PermGroup:
    """N x| H realized on N's points followed by H's points.

    ``action`` maps each generator of H to a permutation of N's points that
    normalizes N; the embedded generator acts by that conjugator on N's
    points and by the H-generator itself on H's points.  Generators of H
    missing from ``action`` act trivially on N.
    """
    for h, c in action.items():
        if h not in H.generators:
            raise GroupError(f"{h} is not a generator of H")
        if len(c) != N.degree:
            raise DegreeMismatch("conjugator degree differs from N")
        Nset = N.element_set
        if not all(g.conjugate(c) in Nset for g in N.generators):
            raise GroupError(f"conjugator {Permutation(c)} does not normalize N")
    n = N.degree + H.degree
    gens = [_shift(g, 0, n) for g in N.generators]
    for h in H.generators:
        c = action.get(h, Permutation.identity(N.degree))
        images = list(c) + [N.degree + x for x in h]
        gens.append(Permutation._raw(images))
    return PermGroup(n, gens, element_cap=max(N.element_cap, H.element_cap))


def swap_wreath(G: PermGroup) -> PermGroup:
    """G wr mu_2: two copies of G on doubled support plus the swap of copies."""
    d = G.degree
    n = 2 * d
    gens = [_shift(g, 0, n) for g in G.generators] + [_shift(g, d, n) for g in G.generators]
    gens.append(Permutation._raw([i + d for i in range(d)] + list(range(d))))
    return PermGroup(n, gens, element_cap=G.element_cap)


# Named groups

def symmetric_group(n: int) -> PermGroup:
    if n < 1:
        raise GroupError("degree 0 is not allowed")
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles(n, [(1, 2)]))
    if n >= 3:
        gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
    return PermGroup(n, gens)


def alternating_group(n: int) -> PermGroup:
    if n < 1:
        raise GroupError("degree 0 is not allowed")
    gens = [Permutation.from_cycles(n, [(1, 2, k)]) for k in range(3, n + 1)]
    return PermGroup(n, gens)


def cyclic_group(n: int) -> PermGroup:
    if n < 1:
        raise GroupError("degree 0 is not allowed")
    gens = [Permutation.from_cycles(n, [tuple(range(1, n + 1))])] if n > 1 else []
    return PermGroup(n, gens)


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of a regular n-gon (order 2n), n >= 3."""
    if n < 3:
        raise GroupError("dihedral group needs n >= 3")
    rot = Permutation.from_cycles(n, [tuple(range(1, n + 1))])
    refl = Permutation._raw([(-i) % n for i in range(n)])
    return PermGroup(n, [rot, refl])


class GroupHom:
    """Homomorphism out of a permutation group, given on generators.

    Construction extends the generator images over the whole source by
    breadth-first search and fails if two words for the same element
    disagree, so a successfully built instance is well defined.
    """

    def __init__(self, source: PermGroup, images: Mapping[Permutation, Permutation]):
        self.source = source
        missing = [g for g in source.generators if g not in images]
        if missing:
            raise GroupError(f"no image given for generator {missing[0]}")
        vals = list(images.values())
        if not vals:
            raise GroupError("empty generator map")
        self.target_degree = len(vals[0])
        ident = Permutation.identity(source.degree)
        table = {ident: Permutation.identity(self.target_degree)}
        frontier = [ident]
        gens = [(g, Permutation(images[g])) for g in source.generators]
        while frontier:
            new = []
            for x in frontier:
                fx = table[x]
                for g, fg in gens:
                    y = x * g
                    fy = fx * fg
                    prev = table.get(y)
                    if prev is None:
                        table[y] = fy
                        new.append(y)
                    elif prev != fy:
                        raise GroupError("generator images do not define a homomorphism")
            frontier = new
        self._table = table

    def __call__(self, x: Permutation) -> Permutation:
        try:
            return self._table[x]
        except KeyError:
            raise NotInGroup(f"{x} is not in the source group") from None

    def kernel(self) -> PermGroup:
        return subgroup_from_elements(self.source, [x for x, fx in self._table.items() if fx.is_identity()])

    def image(self) -> PermGroup:
        return generate(self.target_degree, [self._table[g] for g in self.source.generators])
