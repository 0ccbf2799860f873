"""The Weyl group W(D5) as signed permutations and as permutations of 16 lines.

An element is a pair ``(sigma, v)`` with sigma in S_5 and v an even-weight
vector in F_2^5; it stands for the product ``sigma * iota_v`` (iota_v applied
first).  Indices in names and text are 1-based, as in ``"(1 2 3 4)*i15"``.

The action of iota_ab and iota_abcd on lines is pinned down on a few lines
by the classical formulas; the remaining images are recovered as the unique
involutive automorphism of the 16-line graph extending them.
"""
from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass

from .errors import GroupError, SpecError
from .perms import GroupHom, PermGroup, Permutation, generate, symmetric_group
from .picard import LineConfig, blowup_config, extend_automorphism, preserves_gram

N = 5
WD5_ORDER = 1920


def _vec(indices) -> tuple[int, ...]:
    v = [0] * N
    for i in indices:
        v[i - 1] ^= 1
    return tuple(v)


@dataclass(frozen=True)
class SignedPerm:
    sigma: Permutation
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.sigma) != N or len(self.signs) != N:
            raise GroupError("W(D5) elements live on 5 coordinates")
        if sum(self.signs) % 2:
            raise GroupError(f"odd sign weight {self.signs}: not in W(D5)")

    @classmethod
    def identity(cls) -> SignedPerm:
        return cls(Permutation.identity(N), (0,) * N)

    @classmethod
    def perm(cls, text: str) -> SignedPerm:
        return cls(Permutation.parse(N, text), (0,) * N)

    @classmethod
    def iota(cls, *indices: int) -> SignedPerm:
        return cls(Permutation.identity(N), _vec(indices))

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        return _multiply(self, other)

    def inverse(self) -> SignedPerm:
        prev, x = SignedPerm.identity(), self
        while x != SignedPerm.identity():
            prev, x = x, x * self
        return prev

    def __pow__(self, k: int) -> SignedPerm:
        out = SignedPerm.identity()
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __str__(self):
        parts = []
        if not self.sigma.is_identity():
            parts.append(str(self.sigma))
        if any(self.signs):
            parts.append("i" + "".join(str(i + 1) for i, s in enumerate(self.signs) if s))
        return "*".join(parts) or "()"


def _permute_vec(tau: Permutation, v) -> tuple[int, ...]:
    """The coordinate vector tau^-1(v): entry j is v[tau(j)]."""
    return tuple(v[tau[j]] for j in range(N))


def _mul_right_twist(a, b):
    # (s, v)(t, w) = (st, t^-1(v) + w)
    return SignedPerm(a.sigma * b.sigma,
                      tuple(x ^ y for x, y in zip(_permute_vec(b.sigma, a.signs), b.signs)))


def _mul_left_twist(a, b):
    # (s, v)(t, w) = (st, v + s(w))
    sw = _permute_vec(a.sigma.inverse(), b.signs)
    return SignedPerm(a.sigma * b.sigma, tuple(x ^ y for x, y in zip(a.signs, sw)))


_CONVENTIONS = {"right-twist": _mul_right_twist, "left-twist": _mul_left_twist}


def _multiply(a, b):
    return _CONVENTIONS[multiplication_convention()](a, b)


def parse_element(text: str) -> SignedPerm:
    """Parse ``"(1 2 3 4)*i15"``, ``"i12"``, ``"(1 2 3 4 5)"`` and products thereof."""
    text = text.strip()
    if not text:
        raise SpecError("empty element")
    factors = [f.strip() for f in text.split("*")]
    result = None
    for f in factors:
        if re.fullmatch(r"i\d+", f):
            digits = [int(c) for c in f[1:]]
            if any(not 1 <= d <= N for d in digits) or len(set(digits)) != len(digits):
                raise SpecError(f"bad sign factor {f!r}")
            if len(digits) % 2:
                raise SpecError(f"{f!r} has odd sign weight, which is not in W(D5)")
            x = SignedPerm.iota(*digits)
        else:
            x = SignedPerm(Permutation.parse(N, f), (0,) * N)
        result = x if result is None else result * x
    return result


def rho(g: SignedPerm) -> Permutation:
    """Projection W(D5) -> S_5."""
    return g.sigma


@functools.lru_cache(maxsize=None)
def lines() -> LineConfig:
    return blowup_config(N)


def _name_index():
    return {name: i for i, name in enumerate(lines().names)}


def _L(a, b):
    a, b = sorted((a, b))
    return f"L{a}{b}"


def _complete(partial_names: dict[str, str]) -> Permutation:
    """The unique involutive graph automorphism extending a partial line map."""
    cfg = lines()
    idx = _name_index()
    partial = {idx[k]: idx[v] for k, v in partial_names.items()}
    candidates = extend_automorphism(cfg.graph(), partial, limit=0)
    candidates = [c for c in candidates if all(c[c[i]] == i for i in range(len(c)))]
    if len(candidates) != 1:
        raise GroupError(f"completion of {partial_names} is not unique ({len(candidates)} found)")
    p = Permutation._raw(candidates[0])
    if not preserves_gram(cfg, p):
        raise GroupError("completed map does not preserve the intersection form")
    return p


@functools.lru_cache(maxsize=None)
def iota_pair(a: int, b: int) -> Permutation:
    """iota_ab on lines: E_a <-> E_b and E_c -> L_de."""
    rest = [i for i in range(1, N + 1) if i not in (a, b)]
    partial = {f"E{a}": f"E{b}", f"E{b}": f"E{a}"}
    for c in rest:
        d, e = [i for i in rest if i != c]
        partial[f"E{c}"] = _L(d, e)
    return _complete(partial)


@functools.lru_cache(maxsize=None)
def iota_quad(a: int, b: int, c: int, d: int) -> Permutation:
    """iota_abcd on lines: L_ab -> L_cd, E_a -> L_ae, E_e -> Q."""
    quad = (a, b, c, d)
    (e,) = [i for i in range(1, N + 1) if i not in quad]
    partial = {f"E{e}": "Q"}
    for x in quad:
        partial[f"E{x}"] = _L(x, e)
    for x, y in itertools.combinations(quad, 2):
        z, w = [i for i in quad if i not in (x, y)]
        partial[_L(x, y)] = _L(z, w)
    return _complete(partial)


def index_action(sigma: Permutation) -> Permutation:
    """S_5 acting on lines by permuting indices."""
    cfg = lines()
    idx = _name_index()
    images = []
    for name in cfg.names:
        if name == "Q":
            images.append(idx["Q"])
        else:
            pts = [sigma[int(ch) - 1] + 1 for ch in name[1:]]
            images.append(idx[name[0] + "".join(map(str, sorted(pts)))])
    return Permutation._raw(images)


def kernel_action(v) -> Permutation:
    support = [i + 1 for i, s in enumerate(v) if s]
    if not support:
        return Permutation.identity(len(lines().names))
    if len(support) == 2:
        return iota_pair(*support)
    if len(support) == 4:
        return iota_quad(*support)
    raise GroupError(f"odd sign weight {tuple(v)}")


def _line_action_raw(g: SignedPerm) -> Permutation:
    return index_action(g.sigma) * kernel_action(g.signs)


def _generator_set():
    gens = [SignedPerm.iota(1, 2)]
    for a, b in itertools.combinations(range(1, N + 1), 2):
        gens.append(SignedPerm(Permutation.from_cycles(N, [(a, b)]), (0,) * N))
    return gens


@functools.lru_cache(maxsize=None)
def multiplication_convention() -> str:
    """Pick the semidirect-product convention that makes the line action a homomorphism.

    Tries the right-twist rule first and falls back to the left-twist rule
    once; raises if neither passes on all pairs of test elements.
    """
    probe = _generator_set() + [SignedPerm.iota(1, 2, 3, 4),
                                SignedPerm(Permutation.parse(N, "(1 2 3 4 5)"), _vec([1, 3]))]
    for name, mul in _CONVENTIONS.items():
        if all(_line_action_raw(mul(g, h)) == _line_action_raw(g) * _line_action_raw(h)
               for g in probe for h in probe):
            return name
    raise GroupError("no multiplication convention makes the line action a homomorphism")


def line_action(g: SignedPerm) -> Permutation:
    """The permutation of the 16 lines induced by g (canonical line order)."""
    multiplication_convention()
    return _line_action_raw(g)


def all_elements() -> list[SignedPerm]:
    evens = [v for v in itertools.product((0, 1), repeat=N) if sum(v) % 2 == 0]
    return [SignedPerm(s, v) for s in symmetric_group(N).elements for v in evens]


@functools.lru_cache(maxsize=None)
def full_group() -> PermGroup:
    """W(D5) acting on the 16 lines, generated by iota_12 and the transpositions."""
    return generate(len(lines().names), [line_action(g) for g in _generator_set()])


@functools.lru_cache(maxsize=None)
def _from_lines_table() -> dict[Permutation, SignedPerm]:
    table = {}
    for g in all_elements():
        p = line_action(g)
        if p in table:
            raise GroupError(f"line action is not injective: {g} and {table[p]}")
        table[p] = g
    return table


def from_line_perm(p: Permutation) -> SignedPerm:
    try:
        return _from_lines_table()[p]
    except KeyError:
        raise GroupError(f"{p} is not the line action of an element of W(D5)") from None


def rho_hom() -> GroupHom:
    """rho as a homomorphism from the line-action group onto S_5."""
    G = full_group()
    return GroupHom(G, {g: from_line_perm(g).sigma for g in G.generators})


def fixed_lines(g: SignedPerm) -> frozenset[str]:
    p = line_action(g)
    names = lines().names
    return frozenset(names[i] for i in range(len(names)) if p[i] == i)


def line_cycles(p: Permutation) -> str:
    """Cycle notation on line names, e.g. ``"(E1 E2)(E3 L45)"``."""
    names = lines().names
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(names[i] for i in c) + ")" for c in cyc)
