"""Index-based subgroup lattice of a small permutation group.

Elements are numbered by their position in the sorted element list and a
full multiplication table is built once; subgroups are then Python ints
used as bitsets, which makes containment and intersection tests cheap.
"""
from __future__ import annotations

from .errors import CapExceeded
from .perms import SUBGROUP_CAP, PermGroup, Permutation


def _bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class SubgroupLattice:
    """All subgroups of G, enumerated by the cyclic-extension sweep."""

    def __init__(self, G: PermGroup, *, cap: int = SUBGROUP_CAP):
        if G.order > cap:
            raise CapExceeded("subgroup enumeration group order", cap)
        self.group = G
        elems = G.elements
        self.elements = elems
        index = {g: i for i, g in enumerate(elems)}
        self.index = index
        self.table = [[index[tuple(map(g.__getitem__, h))] for h in elems] for g in elems]
        self.identity = index[G.identity]
        self.inverse = [row.index(self.identity) for row in self.table]
        self._masks = None

    # elementary operations on bitsets

    def closure(self, gens) -> int:
        """Bitset of the subgroup generated by element indices ``gens``."""
        table = self.table
        mask = 1 << self.identity
        frontier = [self.identity]
        gens = [g for g in gens if g != self.identity]
        while frontier:
            new = []
            for x in frontier:
                row = table[x]
                for s in gens:
                    y = row[s]
                    if not mask >> y & 1:
                        mask |= 1 << y
                        new.append(y)
            frontier = new
        return mask

    def members(self, mask) -> list[int]:
        return _bits(mask)

    def conj(self, x, by):
        t = self.table
        return t[t[by][x]][self.inverse[by]]

    def commute(self, a, b) -> bool:
        return self.table[a][b] == self.table[b][a]

    # the sweep

    def _enumerate(self):
        cyclic = {}
        for x in range(len(self.elements)):
            cyclic.setdefault(self.closure([x]), x)
        found = {1 << self.identity: []}
        for mask, x in cyclic.items():
            found.setdefault(mask, [x] if x != self.identity else [])
        queue = list(found)
        while queue:
            H = queue.pop()
            gens = found[H]
            for cmask, x in cyclic.items():
                if cmask & ~H == 0:
                    continue
                K = self.closure(gens + [x])
                if K not in found:
                    found[K] = gens + [x]
                    queue.append(K)
        keyed = sorted(found.items(), key=lambda kv: (bin(kv[0]).count("1"), _bits(kv[0])))
        self._masks = [m for m, _ in keyed]
        self._gens = {m: g for m, g in keyed}

    @property
    def masks(self) -> list[int]:
        if self._masks is None:
            self._enumerate()
        return self._masks

    def gens_of(self, mask) -> list[int]:
        self.masks
        return self._gens[mask]

    @staticmethod
    def size(mask) -> int:
        return bin(mask).count("1")

    def is_abelian(self, mask) -> bool:
        gens = self.gens_of(mask)
        return all(self.commute(a, b) for i, a in enumerate(gens) for b in gens[:i])

    def is_normal_in(self, A, H) -> bool:
        """Whether subgroup A is normalized by every generator of H (A inside H)."""
        agens = self.gens_of(A)
        return all(A >> self.conj(a, h) & 1 for h in self.gens_of(H) for a in agens)

    def centralizer_mask(self, mask) -> int:
        gens = self.gens_of(mask)
        out = 0
        for x in range(len(self.elements)):
            if all(self.commute(x, g) for g in gens):
                out |= 1 << x
        return out

    def to_group(self, mask) -> PermGroup:
        G = self.group
        gens = [self.elements[i] for i in self.gens_of(mask)]
        return PermGroup._from_elements(G.degree, gens, [self.elements[i] for i in _bits(mask)],
                                        G.element_cap)

    def mask_of(self, H: PermGroup) -> int:
        mask = 0
        for h in H.elements:
            mask |= 1 << self.index[Permutation._raw(h)]
        return mask

    def groups(self) -> list[PermGroup]:
        return [self.to_group(m) for m in self.masks]
