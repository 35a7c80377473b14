"""The standard Podleś sphere in its intrinsic PBW basis A^l B^k, A^l B*^m.

Monomials are pairs ``(l, k)``; ``k >= 0`` means A^l B^k and ``k < 0`` means
A^l B*^|k|.  Rewriting rules:

    BA -> q^2 AB,   B*A -> q^-2 AB*,   B*B -> A - A^2,   BB* -> q^2 A - q^4 A^2.

The embedding sends A -> c*c, B -> ac, B* -> c*a*.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Tuple

from .linear import LinearElement, RatTerms, add_rat
from .scalar import RatFunc, Scalar
from .suq2 import AlgebraElement, mono_mul, right_weight, sp
from . import suq2, hopf

PMonomial = Tuple[int, int]
P_ONE: PMonomial = (0, 0)
P_LETTERS = {"A": (1, 0), "B": (0, 1), "Bs": (0, -1)}
_ONE_R = RatFunc(1)


def pdegree(m: PMonomial) -> int:
    return m[0] + abs(m[1])


def b_degree(m: PMonomial) -> int:
    """Signed B-degree; theta acts on the monomial by q^(2 * b_degree)."""
    return m[1]


def _letters(m: PMonomial):
    l, k = m
    return ["A"] * l + (["B"] * k if k >= 0 else ["Bs"] * (-k))


@lru_cache(maxsize=None)
def _times_letter(m: PMonomial, letter: str) -> RatTerms:
    l, k = m
    if letter == "A":
        return {(l + 1, k): sp(4 * k)}
    if letter == "B":
        if k >= 0:
            return {(l, k + 1): _ONE_R}
        mm = -k
        return {(l + 1, k + 1): sp(-4 * (mm - 1)), (l + 2, k + 1): -sp(-8 * (mm - 1))}
    if letter == "Bs":
        if k <= 0:
            return {(l, k - 1): _ONE_R}
        return {(l + 1, k - 1): sp(4 * k), (l + 2, k - 1): -sp(8 * k)}
    raise ValueError(f"unknown Podleś generator {letter!r}")


@lru_cache(maxsize=None)
def pmono_mul(m1: PMonomial, m2: PMonomial) -> RatTerms:
    cur: RatTerms = {m1: _ONE_R}
    for g in _letters(m2):
        nxt: RatTerms = {}
        for m, c in cur.items():
            for m3, r in _times_letter(m, g).items():
                add_rat(nxt, m3, c * r)
        cur = nxt
    return cur


class PodlesElement(LinearElement):
    """Element of O(S_q^2) in PBW normal form."""

    __slots__ = ()
    one_monomial = P_ONE

    @classmethod
    def monomial_text(cls, m: PMonomial) -> str:
        l, k = m
        parts = []
        for name, e in (("A", l), ("B" if k >= 0 else "Bs", abs(k))):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    @classmethod
    def monomial_order(cls, m: PMonomial):
        return (pdegree(m), m[0], -m[1])

    def __mul__(self, other):
        if isinstance(other, PodlesElement):
            return pmultiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = PodlesElement.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def degree(self) -> int:
        return max((pdegree(m) for m in self.terms), default=0)


def pgen(name: str) -> PodlesElement:
    """``A``, ``B`` or ``Bs`` (for B*)."""
    return PodlesElement.from_monomial(P_LETTERS[name])


def pmonomial(m: PMonomial, coef=1) -> PodlesElement:
    return PodlesElement.from_monomial(tuple(m), coef)


def pmultiply(x: PodlesElement, y: PodlesElement) -> PodlesElement:
    return x.bilinear(y, pmono_mul)


def pstar(x: PodlesElement) -> PodlesElement:
    def mono(m):
        l, k = m
        return pmono_mul((0, -k), (l, 0))
    return x.map_monomials(mono)


_EMBED_GEN = {"A": (0, 1, 1), "B": (1, 1, 0)}


@lru_cache(maxsize=None)
def _embed_mono(m: PMonomial) -> RatTerms:
    l, k = m
    cur: RatTerms = {(0, l, l): _ONE_R}
    if k >= 0:
        target = (1, 1, 0)
        for _ in range(k):
            nxt: RatTerms = {}
            for mm, c in cur.items():
                for m3, r in mono_mul(mm, target).items():
                    add_rat(nxt, m3, c * r)
            cur = nxt
    else:
        # B* = c* a* = q a* c*
        for _ in range(-k):
            nxt = {}
            for mm, c in cur.items():
                for m3, r in mono_mul(mm, (-1, 0, 1)).items():
                    add_rat(nxt, m3, c * r * sp(2))
            cur = nxt
    return cur


def embed(x: PodlesElement) -> AlgebraElement:
    return AlgebraElement(x.map_monomials(_embed_mono).terms)


def _candidate(m) -> PMonomial:
    i, j, k = m
    if i >= 0:
        return (k, i)  # A^k B^i ~ a^i c^(k+i) c*^k
    return (j, i)      # A^j B*^|i| ~ a*^|i| c^j c*^(j+|i|)


def unembed(x: AlgebraElement, d: int | None = None) -> PodlesElement:
    """Inverse of ``embed`` on M_0, with optional filtration-degree bound."""
    residual = dict(x.terms)
    out = {}
    # embedded monomials are single terms up to a q-power; peel them off
    while residual:
        m = max(residual, key=lambda mm: (suq2.degree(mm), mm))
        if right_weight(m) != 0:
            raise ValueError("not in image: element has components outside M_0")
        cand = _candidate(m)
        if d is not None and pdegree(cand) > d:
            raise ValueError(f"not in image at degree {d}")
        image = _embed_mono(cand)
        lead = image.get(m)
        if lead is None:
            raise ValueError("not in image: unexpected leading monomial")
        coef = residual[m].scale(lead.inverse())
        out[cand] = out[cand] + coef if cand in out else coef
        for mm, r in image.items():
            v = residual.get(mm, Scalar()) - coef.scale(r)
            if v.is_zero():
                residual.pop(mm, None)
            else:
                residual[mm] = v
    return PodlesElement(out)


def ptheta(x: PodlesElement) -> PodlesElement:
    """theta(A) = A, theta(B) = q^2 B, theta(B*) = q^-2 B*."""
    return x.map_monomials(lambda m: {m: sp(4 * m[1])})


def ptheta_inverse(x: PodlesElement) -> PodlesElement:
    return x.map_monomials(lambda m: {m: sp(-4 * m[1])})


@lru_cache(maxsize=None)
def _phaar_mono(m: PMonomial) -> RatFunc:
    if m[1] != 0:
        return RatFunc(0)
    return sum((r * suq2.mono_haar(mm) for mm, r in _embed_mono(m).items()), RatFunc(0))


def phaar(x: PodlesElement) -> Scalar:
    total = Scalar()
    for m, c in x.terms.items():
        h = _phaar_mono(m)
        if not h.is_zero():
            total = total + c.scale(h)
    return total


def pcounit(x: PodlesElement) -> Scalar:
    # eps(A) = eps(B) = eps(B*) = 0
    return x.coefficient(P_ONE)


def pact_left(word, x: PodlesElement) -> PodlesElement:
    """f |> x computed through the embedding."""
    return unembed(hopf.act_left(word, embed(x)), x.degree() + 1)


def pact_right(word, x: PodlesElement) -> AlgebraElement:
    """d_f(x): the right action leaves the sphere, so the result lives in O(SU_q(2))."""
    return hopf.act_right(word, embed(x))


def to_podles(x) -> PodlesElement:
    if isinstance(x, PodlesElement):
        return x
    if isinstance(x, AlgebraElement):
        return unembed(x)
    return PodlesElement.scalar(x)
