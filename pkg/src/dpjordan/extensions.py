"""Groups given by Cayley table, and extensions of mu_2^k by mu_4.

An extension is encoded on pairs ``(a, x)`` with ``a`` in mu_2^k (a k-bit
int, addition is XOR) and ``x`` in Z/4, with product

    (a, x)(b, y) = (a + phi_x(b) + f(x, y), x + y)

for an action ``phi`` of Z/4 on mu_2^k and a normalized 2-cocycle ``f``.
Element ``(a, x)`` gets index ``x * 2**k + a``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import GroupError
from .perms import PermGroup, Permutation

QUOTIENT_ORDER = 4


@dataclass(frozen=True)
class TableGroup:
    """A finite group given by its multiplication table.

    ``table[i][j]`` is the index of the product of elements i and j.  The
    constructor checks the Latin square property, the identity and full
    associativity.
    """

    table: tuple[tuple[int, ...], ...]
    identity_index: int = 0
    label: str = field(default="", compare=False)

    def __post_init__(self):
        T = np.asarray(self.table)
        m = len(T)
        if T.shape != (m, m) or m == 0:
            raise GroupError("table must be a nonempty square")
        full = np.arange(m)
        if not ((np.sort(T, axis=1) == full).all() and (np.sort(T, axis=0) == full[:, None]).all()):
            raise GroupError("table is not a Latin square")
        e = self.identity_index
        if not ((T[e] == full).all() and (T[:, e] == full).all()):
            raise GroupError(f"element {e} is not a two-sided identity")
        lhs = T[T]                                  # (ab)c
        rhs = T[full[:, None, None], T[None, :, :]]  # a(bc)
        if not (lhs == rhs).all():
            raise GroupError("table is not associative")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, i, j) -> int:
        return self.table[i][j]

    def is_abelian(self) -> bool:
        T = np.asarray(self.table)
        return bool((T == T.T).all())


def regular_representation(G: TableGroup) -> PermGroup:
    """Left-translation action of G on itself, as a permutation group.

    Element i maps to the permutation x -> i*x, so composition of the
    images matches the table product.
    """
    m = G.order
    perms = [Permutation._raw(G.table[i]) for i in range(m)]
    rep = PermGroup._from_elements(m, [], perms)
    # pick a small generating set from the full image
    from .perms import subgroup_from_elements

    return subgroup_from_elements(rep, perms)


def actions(k: int) -> list[tuple[int, ...]]:
    """Every hom Z/4 -> Aut(mu_2^k), given by the image of the generator.

    The generator must map to an automorphism of order dividing 4.  For
    k = 0, 1 only the identity exists; Aut(mu_2^2) = S_3 has no element of
    order 4, so the image has order 1 or 2 (identity plus 3 transpositions).
    """
    if k not in (0, 1, 2):
        raise GroupError("kernel rank must be 0, 1 or 2")
    if k < 2:
        return [tuple(range(2 ** k))]
    out = []
    for a in itertools.permutations(range(1, 4)):
        phi = (0,) + a
        # linear over F_2: phi(1) ^ phi(2) == phi(3)
        if phi[1] ^ phi[2] != phi[3]:
            continue
        p = list(range(4))
        for _ in range(4):
            p = [phi[v] for v in p]
        if p == list(range(4)):
            out.append(phi)
    return sorted(out)


def _action_powers(phi):
    powers = [tuple(range(len(phi)))]
    for _ in range(QUOTIENT_ORDER - 1):
        powers.append(tuple(phi[v] for v in powers[-1]))
    return np.array(powers)


def valid_cocycles(k: int, phi) -> np.ndarray:
    """All normalized 2-cocycles Z/4 x Z/4 -> mu_2^k for the action ``phi``.

    Returns an array of shape (count, 4, 4).  The nine entries f(x, y) with
    x, y != 0 are swept over every value and filtered by

        phi_x(f(y, z)) + f(x, y + z) == f(x, y) + f(x + y, z)

    for all triples, vectorized over candidates.
    """
    q = QUOTIENT_ORDER
    h = 2 ** k
    free = [(x, y) for x in range(1, q) for y in range(1, q)]
    grids = np.array(list(itertools.product(range(h), repeat=len(free))), dtype=np.int8)
    F = np.zeros((len(grids), q, q), dtype=np.int8)
    for col, (x, y) in enumerate(free):
        F[:, x, y] = grids[:, col]
    P = _action_powers(phi)
    ok = np.ones(len(F), dtype=bool)
    for x, y, z in itertools.product(range(q), repeat=3):
        lhs = P[x][F[:, y, z]] ^ F[:, x, (y + z) % q]
        rhs = F[:, x, y] ^ F[:, (x + y) % q, z]
        ok &= lhs == rhs
    return F[ok]


def extension_table(k: int, phi, f) -> tuple[tuple[int, ...], ...]:
    h = 2 ** k
    q = QUOTIENT_ORDER
    P = _action_powers(phi)
    rows = []
    for x in range(q):
        for a in range(h):
            row = []
            for y in range(q):
                for b in range(h):
                    c = a ^ int(P[x][b]) ^ int(f[x][y])
                    row.append(((x + y) % q) * h + c)
            rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class Extension:
    kernel_rank: int
    action: tuple[int, ...]
    cocycle: tuple[tuple[int, ...], ...]
    group: TableGroup

    @property
    def trivial_action(self) -> bool:
        return self.action == tuple(range(len(self.action)))

    def kernel_indices(self) -> list[int]:
        return list(range(2 ** self.kernel_rank))

    def kernel_is_central(self) -> bool:
        T = self.group.table
        return all(T[a][g] == T[g][a] for a in self.kernel_indices() for g in range(self.group.order))


def enumerate_extensions(kernel_rank: int, quotient: int = QUOTIENT_ORDER) -> list[Extension]:
    """All (action, normalized cocycle) extensions of mu_2^k by the cyclic group of order 4.

    No deduplication up to isomorphism or cohomology: every valid pair gives
    one entry, each with an associativity-checked table.
    """
    if quotient != QUOTIENT_ORDER:
        raise GroupError("only the cyclic quotient of order 4 is supported")
    out = []
    for phi in actions(kernel_rank):
        for f in valid_cocycles(kernel_rank, phi):
            fc = tuple(tuple(int(v) for v in row) for row in f)
            table = extension_table(kernel_rank, phi, fc)
            out.append(Extension(kernel_rank, tuple(phi), fc, TableGroup(table, 0)))
    return out
