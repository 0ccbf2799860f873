"""Concrete permutation models of the automorphism groups in the worked examples."""
from __future__ import annotations

from .perms import (PermGroup, Permutation, alternating_group, semidirect_product,
                    swap_wreath, symmetric_group)


def _transpositions(degree, pairs):
    images = list(range(degree))
    for a, b in pairs:
        images[a], images[b] = b, a
    return Permutation._raw(images)


def dp4_sign_group() -> PermGroup:
    """mu_2^4 x| mu_2 of order 32 on 10 signed coordinate points.

    Coordinate i has the points 2i (+) and 2i+1 (-).  Projective sign changes
    of the five coordinates are represented by their even-weight member
    (one per class modulo the all-ones vector), generated by flipping
    coordinate i together with the last one; the extra involution swaps
    x with y and z with t.
    """
    n = 10
    signs = [_transpositions(n, [(2 * i, 2 * i + 1), (8, 9)]) for i in range(4)]
    swap = _transpositions(n, [(0, 2), (1, 3), (4, 6), (5, 7)])
    return PermGroup(n, signs + [swap])


def dp4_sign_kernel() -> PermGroup:
    G = dp4_sign_group()
    return PermGroup(G.degree, G.generators[:4])


def dp6_parts(n: int) -> tuple[PermGroup, PermGroup]:
    """(G, N) with G = mu_n^2 x| mu_2^2 and N the embedded mu_n^2.

    mu_n^2 acts as two disjoint n-cycles; the first involution inverts both
    cycles, the second swaps them.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    d = 2 * n
    a = Permutation._raw([(i + 1) % n if i < n else i for i in range(d)])
    b = Permutation._raw([i if i < n else n + (i - n + 1) % n for i in range(d)])
    N = PermGroup(d, [a, b])
    invert = Permutation._raw([(-i) % n if i < n else n + (-(i - n)) % n for i in range(d)])
    swap = Permutation._raw([i + n if i < n else i - n for i in range(d)])
    h1 = Permutation.from_cycles(4, [(1, 2)])
    h2 = Permutation.from_cycles(4, [(3, 4)])
    H = PermGroup(4, [h1, h2])
    G = semidirect_product(N, H, {h1: invert, h2: swap})
    N_in_G = PermGroup(G.degree, G.generators[:2])
    return G, N_in_G


def dp6_group(n: int) -> PermGroup:
    return dp6_parts(n)[0]


def dp8_product_group() -> PermGroup:
    """(A_5 x A_5) x| mu_2 with the factor swap, on 10 points."""
    return swap_wreath(alternating_group(5))


def dp8_s5() -> PermGroup:
    return symmetric_group(5)
