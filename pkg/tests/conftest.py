import pytest

from dpjordan.perms import Permutation
from dpjordan.verify import VerifyConfig, run_all


@pytest.fixture(scope="session")
def full_report():
    return run_all(VerifyConfig(deterministic=True))


def naive_subgroups(elements):
    """Every subgroup of a finite group given as a set of permutations.

    Grows subgroups one element at a time from the trivial group; any
    subgroup is reachable this way, so nothing depends on the library's
    lattice code.
    """
    elements = list(elements)
    ident = Permutation.identity(len(elements[0]))

    def close(gens):
        seen = {ident}
        frontier = [ident]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = x * g
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return frozenset(seen)

    found = {frozenset([ident])}
    frontier = list(found)
    while frontier:
        new = []
        for H in frontier:
            for g in elements:
                if g not in H:
                    K = close(list(H) + [g])
                    if K not in found:
                        found.add(K)
                        new.append(K)
        frontier = new
    return found


def naive_jordan(elements):
    subs = naive_subgroups(elements)

    def abelian(S):
        return all(a * b == b * a for a in S for b in S)

    def normal_in(A, H):
        return all(h * a * h.inverse() in A for h in H for a in A)

    best = 1
    for H in subs:
        biggest = max(len(A) for A in subs if A <= H and abelian(A) and normal_in(A, H))
        best = max(best, len(H) // biggest)
    return best
