"""Text descriptions of groups for the command line.

Grammar::

    spec   := "perm:" degree ":" gens        gens separated by ";", 1-indexed cycles
            | "s" n | "a" n | "cyclic:" n | "dihedral:" n
            | "wd5" | "ex-dp4-32" | "ex-dp6:n=" p | "ex-dp8-product" | "ex-dp8-s5"
            | "product(" spec "," spec ")" | "swapwreath(" spec ")"

``str(parse_spec(text))`` is the canonical form and parses back to an equal
spec.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import constructions, weyl
from .errors import GroupError, SpecError
from .perms import (ELEMENT_CAP, PermGroup, Permutation, alternating_group, cyclic_group,
                    dihedral_group, direct_product, swap_wreath, symmetric_group)

NAMED = ("wd5", "ex-dp4-32", "ex-dp8-product", "ex-dp8-s5")


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    args: tuple = ()

    def __str__(self):
        k, a = self.kind, self.args
        if k == "perm":
            degree, gens = a
            return f"perm:{degree}:" + ";".join(str(Permutation(g)) for g in gens)
        if k in ("s", "a"):
            return f"{k}{a[0]}"
        if k in ("cyclic", "dihedral"):
            return f"{k}:{a[0]}"
        if k == "ex-dp6":
            return f"ex-dp6:n={a[0]}"
        if k == "product":
            return f"product({a[0]},{a[1]})"
        if k == "swapwreath":
            return f"swapwreath({a[0]})"
        return k


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise SpecError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _positive(text: str, what: str) -> int:
    if not re.fullmatch(r"\d+", text) or int(text) < 1:
        raise SpecError(f"{what} must be a positive integer, got {text!r}")
    return int(text)


def parse_spec(text: str) -> GroupSpec:
    t = text.strip()
    if t in NAMED:
        return GroupSpec(t)
    m = re.fullmatch(r"(product|swapwreath)\((.*)\)", t)
    if m:
        inner = _split_top(m.group(2))
        want = 2 if m.group(1) == "product" else 1
        if len(inner) != want:
            raise SpecError(f"{m.group(1)} takes {want} argument(s)")
        return GroupSpec(m.group(1), tuple(parse_spec(x) for x in inner))
    m = re.fullmatch(r"perm:(\d+):(.*)", t)
    if m:
        degree = _positive(m.group(1), "degree")
        gens = tuple(tuple(Permutation.parse(degree, g)) for g in m.group(2).split(";") if g.strip())
        return GroupSpec("perm", (degree, gens))
    m = re.fullmatch(r"([sa])(\d+)", t)
    if m:
        return GroupSpec(m.group(1), (_positive(m.group(2), "degree"),))
    m = re.fullmatch(r"(cyclic|dihedral):(\d+)", t)
    if m:
        n = _positive(m.group(2), "n")
        if m.group(1) == "dihedral" and n < 3:
            raise SpecError("dihedral:n needs n >= 3")
        return GroupSpec(m.group(1), (n,))
    m = re.fullmatch(r"ex-dp6:n=(\d+)", t)
    if m:
        n = int(m.group(1))
        if n < 3 or not _is_prime(n):
            raise SpecError("ex-dp6 needs an odd prime n")
        return GroupSpec("ex-dp6", (n,))
    raise SpecError(f"cannot parse group spec {text!r}")


def build(spec: GroupSpec, *, element_cap: int = ELEMENT_CAP) -> PermGroup:
    k, a = spec.kind, spec.args
    if k == "perm":
        G = PermGroup(a[0], a[1])
    elif k == "s":
        G = symmetric_group(a[0])
    elif k == "a":
        G = alternating_group(a[0])
    elif k == "cyclic":
        G = cyclic_group(a[0])
    elif k == "dihedral":
        G = dihedral_group(a[0])
    elif k == "wd5":
        G = PermGroup(16, weyl.full_group().generators)
    elif k == "ex-dp4-32":
        G = constructions.dp4_sign_group()
    elif k == "ex-dp6":
        G = constructions.dp6_group(a[0])
    elif k == "ex-dp8-product":
        G = constructions.dp8_product_group()
    elif k == "ex-dp8-s5":
        G = constructions.dp8_s5()
    elif k == "product":
        G = direct_product(build(a[0], element_cap=element_cap), build(a[1], element_cap=element_cap))
    elif k == "swapwreath":
        G = swap_wreath(build(a[0], element_cap=element_cap))
    else:
        raise GroupError(f"unknown spec kind {k!r}")
    G.element_cap = element_cap
    return G
