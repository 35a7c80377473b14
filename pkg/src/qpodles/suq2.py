"""The coordinate algebra of quantum SU(2) in PBW normal form.

Monomials are triples ``(i, j, k)``: for ``i >= 0`` the monomial a^i c^j c*^k,
for ``i < 0`` the monomial a*^|i| c^j c*^k.  Relations used for rewriting:

    ac = q ca,  ac* = q c*a,  cc* = c*c,  a*c = q^-1 c a*,  a*c* = q^-1 c* a*,
    a*a + c*c = 1,  aa* + q^2 cc* = 1.
"""
from __future__ import annotations

import os
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from .linear import LinearElement, RatTerms, add_rat
from .scalar import RatFunc, Scalar, qint

Monomial = Tuple[int, int, int]
ONE: Monomial = (0, 0, 0)
GEN_A: Monomial = (1, 0, 0)
GEN_AS: Monomial = (-1, 0, 0)
GEN_C: Monomial = (0, 1, 0)
GEN_CS: Monomial = (0, 0, 1)
LETTER_MONOMIAL = {"a": GEN_A, "as": GEN_AS, "c": GEN_C, "cs": GEN_CS}


def sp(k: int) -> RatFunc:
    """q^(k/2) as a rational function in s."""
    return RatFunc.spow(k)


_ONE_R = RatFunc(1)


def right_weight(m: Monomial) -> int:
    """N with partial_{K^2} m = q^-N m."""
    i, j, k = m
    return -i + j - k


def left_weight2(m: Monomial) -> int:
    """Twice the K-weight: K |> m = q^(w/2) m."""
    i, j, k = m
    return -i - j + k


def degree(m: Monomial) -> int:
    return abs(m[0]) + m[1] + m[2]


def letters(m: Monomial) -> List[str]:
    i, j, k = m
    head = ["a"] * i if i >= 0 else ["as"] * (-i)
    return head + ["c"] * j + ["cs"] * k


def monomial_from_letters(word) -> Monomial:
    i, j, k = 0, 0, 0
    for g in word:
        dm = LETTER_MONOMIAL[g]
        i, j, k = i + dm[0], j + dm[1], k + dm[2]
    return (i, j, k)


@lru_cache(maxsize=None)
def _times_letter(m: Monomial, letter: str) -> RatTerms:
    i, j, k = m
    if letter == "c":
        return {(i, j + 1, k): _ONE_R}
    if letter == "cs":
        return {(i, j, k + 1): _ONE_R}
    if letter == "a":
        f = sp(-2 * (j + k))
        if i >= 0:
            return {(i + 1, j, k): f}
        return {(i + 1, j, k): f, (i + 1, j + 1, k + 1): -f}
    if letter == "as":
        f = sp(2 * (j + k))
        if i <= 0:
            return {(i - 1, j, k): f}
        return {(i - 1, j, k): f, (i - 1, j + 1, k + 1): -(f * sp(4))}
    raise ValueError(f"unknown generator {letter!r}")


@lru_cache(maxsize=None)
def mono_mul(m1: Monomial, m2: Monomial) -> RatTerms:
    """Normal form of the product of two monomials."""
    if m2 == ONE:
        return {m1: _ONE_R}
    if m1 == ONE:
        return {m2: _ONE_R}
    i2, j2, k2 = m2
    cur: RatTerms = {m1: _ONE_R}
    step = "a" if i2 > 0 else "as"
    for _ in range(abs(i2)):
        nxt: RatTerms = {}
        for m, c in cur.items():
            for m3, r in _times_letter(m, step).items():
                add_rat(nxt, m3, c * r)
        cur = nxt
    # c and c* commute with c, c* and sit at the right end
    return {(i, j + j2, k + k2): c for (i, j, k), c in cur.items()}


@lru_cache(maxsize=None)
def mono_star(m: Monomial) -> RatTerms:
    i, j, k = m
    # (a^i c^j c*^k)* = c*^k c^j (a*)^i = q^(..) (a*)^i c^j c*^k
    return mono_mul((0, k, j), (-i, 0, 0))


@lru_cache(maxsize=None)
def mono_haar(m: Monomial) -> RatFunc:
    i, j, k = m
    if i != 0 or j != k:
        return RatFunc(0)
    return (_ONE_R - sp(4)) / (_ONE_R - sp(4 * j + 4))


@lru_cache(maxsize=None)
def mono_pair_haar(m1: Monomial, m2: Monomial) -> RatFunc:
    """h(m1 m2)."""
    total = RatFunc(0)
    for m, r in mono_mul(m1, m2).items():
        if m[0] == 0 and m[1] == m[2]:
            total = total + r * mono_haar(m)
    return total


class AlgebraElement(LinearElement):
    """Element of O(SU_q(2)) in PBW normal form."""

    __slots__ = ()
    one_monomial = ONE

    @classmethod
    def monomial_text(cls, m: Monomial) -> str:
        i, j, k = m
        parts = []
        for name, e in (("a" if i >= 0 else "as", abs(i)), ("c", j), ("cs", k)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    @classmethod
    def monomial_order(cls, m: Monomial):
        return (degree(m), -m[0], m[1], m[2])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = AlgebraElement.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def degree(self) -> int:
        return max((degree(m) for m in self.terms), default=0)

    def right_weights(self):
        return {right_weight(m) for m in self.terms}


def gen(name: str) -> AlgebraElement:
    """One of the generators ``a``, ``as`` (a*), ``c``, ``cs`` (c*)."""
    return AlgebraElement.from_monomial(LETTER_MONOMIAL[name])


def monomial(m: Monomial, coef=1) -> AlgebraElement:
    return AlgebraElement.from_monomial(tuple(m), coef)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x.bilinear(y, mono_mul)


def star(x: AlgebraElement) -> AlgebraElement:
    # coefficients live in a real field, so conjugation is the identity on them
    return x.map_monomials(mono_star)


def counit(x: AlgebraElement) -> Scalar:
    total = Scalar()
    for (i, j, k), c in x.terms.items():
        if j == 0 and k == 0:
            total = total + c
    return total


def haar(x: AlgebraElement) -> Scalar:
    total = Scalar()
    for m, c in x.terms.items():
        h = mono_haar(m)
        if not h.is_zero():
            total = total + c.scale(h)
    return total


def haar_product(x: AlgebraElement, y: AlgebraElement) -> Scalar:
    """h(x y), touching only monomial pairs of opposite weights."""
    by_weight: Dict[Tuple[int, int], list] = {}
    for m, c in y.terms.items():
        by_weight.setdefault((right_weight(m), left_weight2(m)), []).append((m, c))
    total = Scalar()
    for m1, c1 in x.terms.items():
        for m2, c2 in by_weight.get((-right_weight(m1), -left_weight2(m1)), ()):
            h = mono_pair_haar(m1, m2)
            if not h.is_zero():
                total = total + (c1 * c2).scale(h)
    return total


def inner(x: AlgebraElement, y: AlgebraElement) -> Scalar:
    """Haar inner product <x, y> = h(x* y)."""
    return haar_product(star(x), y)


def theta(x: AlgebraElement) -> AlgebraElement:
    """Modular automorphism: theta(a) = q^2 a, theta(c) = c."""
    return x.map_monomials(lambda m: {m: sp(4 * m[0])})


def theta_inverse(x: AlgebraElement) -> AlgebraElement:
    return x.map_monomials(lambda m: {m: sp(-4 * m[0])})


def grade_component(x: AlgebraElement, N: int) -> AlgebraElement:
    return AlgebraElement({m: c for m, c in x.terms.items() if right_weight(m) == N})


# ---------------------------------------------------------------- v-basis

def _half(x) -> Fraction:
    f = Fraction(x)
    if (2 * f).denominator != 1:
        raise ValueError(f"{x} is not a half-integer")
    return f


def alpha(l, j) -> Scalar:
    """Ladder coefficient sqrt([l-j][l+j+1])."""
    l, j = _half(l), _half(j)
    return Scalar.sqrt(qint(l - j) * qint(l + j + 1))


CACHE_VERSION = "qpodles-vbasis-1"
_VCACHE: Dict[Tuple[int, int, int], AlgebraElement] = {}
_VLOCK = threading.RLock()
_CACHE_LOADED = {"path": None}


def _cache_path():
    return os.environ.get("QPODLES_CACHE") or None


def _load_cache_file(path: str) -> None:
    from .expr import parse_algebra
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except FileNotFoundError:
        return
    if not lines or lines[0].strip() != f"# {CACHE_VERSION}":
        return  # stale format: ignore and overwrite on the next write
    for line in lines[1:]:
        if "->" not in line:
            continue
        head, body = line.split("->", 1)
        l2, j2, k2 = (int(2 * Fraction(t)) for t in head.strip().strip("()").split())
        _VCACHE.setdefault((l2, j2, k2), parse_algebra(body.strip()))


def _write_cache_file(path: str) -> None:
    def fmt(x2):
        return str(Fraction(x2, 2))
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(f"# {CACHE_VERSION}\n")
        for (l2, j2, k2), v in sorted(_VCACHE.items()):
            fh.write(f"({fmt(l2)} {fmt(j2)} {fmt(k2)}) -> {v}\n")
    os.replace(tmp, path)


def _ensure_cache_loaded():
    path = _cache_path()
    if path and _CACHE_LOADED["path"] != path:
        _load_cache_file(path)
        _CACHE_LOADED["path"] = path


def v_basis(l, j, k) -> AlgebraElement:
    """Orthonormal Peter-Weyl vector v^l_{jk}."""
    l, j, k = _half(l), _half(j), _half(k)
    if l < 0 or abs(j) > l or abs(k) > l or (l - j).denominator != 1 or (l - k).denominator != 1:
        raise ValueError(f"index out of range: l={l}, j={j}, k={k}")
    key = (int(2 * l), int(2 * j), int(2 * k))
    with _VLOCK:
        _ensure_cache_loaded()
        if key in _VCACHE:
            return _VCACHE[key]
        before = len(_VCACHE)
        v = _build_v(l, j, k)
        path = _cache_path()
        if path and len(_VCACHE) > before:
            _write_cache_file(path)
        return v


def _build_v(l: Fraction, j: Fraction, k: Fraction) -> AlgebraElement:
    from .hopf import act_left, act_right
    key = (int(2 * l), int(2 * j), int(2 * k))
    if key in _VCACHE:
        return _VCACHE[key]
    if j == -l and k == -l:
        n = int(2 * l)
        norm = haar_product(monomial((-n, 0, 0)), monomial((n, 0, 0)))
        v = monomial((n, 0, 0), Scalar.sqrt(norm.inverse()))
    elif j == -l:
        prev = _build_v(l, j, k - 1)
        v = act_left("E", prev).scale(alpha(l, k - 1).inverse())
    else:
        prev = _build_v(l, j - 1, k)
        v = act_right("F", prev).scale(-alpha(l, j - 1).inverse())
    _VCACHE[key] = v
    return v


def spins_for(j, k, L):
    """Spins l <= L admitting indices (j, k)."""
    j, k, L = _half(j), _half(k), _half(L)
    l = max(abs(j), abs(k))
    out = []
    while l <= L:
        out.append(l)
        l += 1
    return out


def expand_in_v(x: AlgebraElement, L, check: bool = True):
    """Coefficients <v^l_{jk}, x> for l <= L, as sorted (l, j, k, Scalar) tuples.

    With ``check`` the reconstruction is compared against ``x`` and a
    ``ValueError`` is raised if a residual remains (L too small).
    """
    L = _half(L)
    out = []
    groups: Dict[Tuple[int, int], AlgebraElement] = {}
    for m, c in x.terms.items():
        groups.setdefault((right_weight(m), left_weight2(m)), AlgebraElement())
        groups[(right_weight(m), left_weight2(m))].terms[m] = c
    for (N, w2), part in sorted(groups.items()):
        j, k = Fraction(N, 2), Fraction(w2, 2)
        for l in spins_for(j, k, L):
            coef = inner(v_basis(l, j, k), part)
            if not coef.is_zero():
                out.append((l, j, k, coef))
    out.sort()
    if check:
        residual = x - sum((v_basis(l, j, k).scale(c) for l, j, k, c in out), AlgebraElement())
        if not residual.is_zero():
            raise ValueError(f"expand_in_v: nonzero residual at L={L}; raise the cutoff")
    return out
