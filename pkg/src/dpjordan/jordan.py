"""Jordan constants of finite permutation groups.

``nu(G)`` is the least index of a normal abelian subgroup of G; the Jordan
constant of a finite group is the largest ``nu(H)`` over its subgroups H.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import SubgroupLattice
from .perms import SUBGROUP_CAP, PermGroup, normal_subgroups

EXHAUSTIVE = "exhaustive"
FAST_PATH = "fast-path"
LOWER_BOUND = "lower-bound-only"


@dataclass(frozen=True)
class JordanResult:
    group_order: int
    nu: int
    jordan: int | str
    witness_subgroup: PermGroup = field(compare=False)
    method: str
    lower_bound: int | None = None

    @property
    def exact(self) -> bool:
        return self.jordan != LOWER_BOUND

    def value(self) -> int:
        """The exact constant, or the proven lower bound."""
        return self.jordan if self.exact else self.lower_bound


def nu(G: PermGroup) -> tuple[int, PermGroup]:
    """Minimal index of a normal abelian subgroup, with a largest such subgroup."""
    best = None
    for N in normal_subgroups(G):
        if N.is_abelian() and (best is None or N.order > best.order):
            best = N
    return G.order // best.order, best


def _nu_table(lat: SubgroupLattice) -> dict[int, tuple[int, int]]:
    """For every subgroup mask: (nu, mask of a largest normal abelian subgroup)."""
    masks = lat.masks
    abelian = [m for m in masks if lat.is_abelian(m)]
    out = {}
    for H in masks:
        best = 1 << lat.identity
        for A in abelian:
            if A & ~H == 0 and lat.size(A) > lat.size(best) and lat.is_normal_in(A, H):
                best = A
        out[H] = (lat.size(H) // lat.size(best), best)
    return out


def jordan_constant(G: PermGroup, *, cap: int = SUBGROUP_CAP, method: str = "auto") -> JordanResult:
    """Jordan constant of G.

    With ``method="auto"``: if nu(G) = |G| the answer is |G| without a
    subgroup sweep; otherwise the sweep runs when |G| <= cap, and past the
    cap only the lower bound nu(G) is reported.  ``method="exhaustive"``
    always sweeps (subject to the cap).
    """
    if method not in ("auto", EXHAUSTIVE):
        raise ValueError(f"unknown method {method!r}")
    n0, witness = nu(G)
    if method == "auto" and n0 == G.order:
        return JordanResult(G.order, n0, G.order, witness, FAST_PATH)
    if G.order > cap:
        return JordanResult(G.order, n0, LOWER_BOUND, witness, LOWER_BOUND, lower_bound=n0)
    lat = SubgroupLattice(G, cap=cap)
    table = _nu_table(lat)
    best = max(v for v, _ in table.values())
    return JordanResult(G.order, n0, best, witness, EXHAUSTIVE)


def isaacs_bound_check(G: PermGroup, *, cap: int = SUBGROUP_CAP) -> bool:
    """J(G) <= [G:A]^2 for every abelian subgroup A."""
    J = jordan_constant(G, cap=cap, method=EXHAUSTIVE).jordan
    lat = SubgroupLattice(G, cap=cap)
    return all(J <= (G.order // lat.size(A)) ** 2 for A in lat.masks if lat.is_abelian(A))


def commuting_subgroup_pairs(G: PermGroup, *, cap: int = SUBGROUP_CAP) -> list[tuple[PermGroup, PermGroup]]:
    """All ordered pairs (A, B) of subgroups of G that commute elementwise."""
    lat = SubgroupLattice(G, cap=cap)
    groups = {m: lat.to_group(m) for m in lat.masks}
    out = []
    for A in lat.masks:
        C = lat.centralizer_mask(A)
        for B in lat.masks:
            if B & ~C == 0:
                out.append((groups[A], groups[B]))
    return out


def abelian_subgroups(G: PermGroup, *, cap: int = SUBGROUP_CAP) -> list[PermGroup]:
    lat = SubgroupLattice(G, cap=cap)
    return [lat.to_group(m) for m in lat.masks if lat.is_abelian(m)]
