"""U_q(su2): generator words, left and right actions, spin representations.

Left action f |> x and right action d_f(x) (the latter written d_f for the
operator x -> x <| S^-1(f)) both satisfy d_{fg} = d_f d_g, so a word acts by
applying its rightmost letter first.  Twisted Leibniz rules:

    E |> (xy) = (E |> x)(K |> y) + (K^-1 |> x)(E |> y)
    d_E(xy)   = d_K(x) d_E(y) + d_E(x) d_{K^-1}(y)

and the same with F in place of E.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from .linear import RatTerms, add_rat
from .scalar import RatFunc, Scalar
from .suq2 import (ONE, AlgebraElement, Monomial, alpha, left_weight2, letters,
                   mono_mul, monomial_from_letters, sp, right_weight)

LETTERS = ("E", "F", "K", "Kinv")


# ---------------------------------------------------------------- words

def normalize_word(word: Union[str, Sequence[str]]) -> Tuple[str, ...]:
    """Parse ``"K^-1 E"``-style text or a letter sequence; cancel K Kinv pairs."""
    if isinstance(word, str):
        seq = parse_word(word)
    else:
        seq = list(word)
    out: List[str] = []
    for g in seq:
        if g not in LETTERS:
            raise ValueError(f"unknown generator letter {g!r}")
        if out and {out[-1], g} == {"K", "Kinv"}:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


_WORD_TOKEN = re.compile(r"\s*(Kinv|[EFK])(?:\^(-?\d+))?")


def parse_word(text: str) -> List[str]:
    """``"K^-1E"``, ``"K^2"``, ``"E F"``, ``"Kinv"`` -> letter list; empty text is the unit."""
    pos, out = 0, []
    text = text.strip()
    if text in ("", "1"):
        return []
    while pos < len(text):
        m = _WORD_TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad generator word at offset {pos}: {text!r}")
        g, e = m.group(1), int(m.group(2) or 1)
        if g == "Kinv":
            g, e = "K", -e
        if g == "K":
            out += ["K" if e > 0 else "Kinv"] * abs(e)
        else:
            if e < 0:
                raise ValueError("negative powers only for K")
            out += [g] * e
        pos = m.end()
        while pos < len(text) and text[pos] in " *":
            pos += 1
    return out


def word_text(word: Sequence[str]) -> str:
    return " ".join("K^-1" if g == "Kinv" else g for g in word) or "1"


def antipode(word: Sequence[str]) -> Tuple[Scalar, Tuple[str, ...]]:
    """S(w) = scalar * word: S(E) = -qE, S(F) = -q^-1 F, S(K) = K^-1."""
    coef = Scalar(1)
    out = []
    for g in reversed(word):
        if g == "E":
            coef = coef * (-Scalar.q(1))
        elif g == "F":
            coef = coef * (-Scalar.q(-1))
        out.append({"K": "Kinv", "Kinv": "K"}.get(g, g))
    return coef, normalize_word(out)


def word_star(word: Sequence[str]) -> Tuple[str, ...]:
    """(g1...gn)* = gn*...g1* with E* = F, K* = K."""
    return normalize_word([{"E": "F", "F": "E"}.get(g, g) for g in reversed(word)])


def counit_word(word: Sequence[str]) -> int:
    return 0 if any(g in ("E", "F") for g in word) else 1


# ---------------------------------------------------------------- actions

_R = RatFunc
_LEFT_TABLE = {
    "E": {"a": {(0, 0, 1): -sp(2)}, "c": {(-1, 0, 0): _R(1)}, "cs": {}, "as": {}},
    "F": {"a": {}, "c": {}, "cs": {(1, 0, 0): -sp(-2)}, "as": {(0, 1, 0): _R(1)}},
}
_RIGHT_TABLE = {
    "E": {"a": {}, "c": {(1, 0, 0): -sp(-2)}, "as": {(0, 0, 1): _R(1)}, "cs": {}},
    "F": {"a": {(0, 1, 0): -sp(2)}, "c": {}, "as": {}, "cs": {(-1, 0, 0): _R(1)}},
}
_LETTER_LEFT_W = {"a": -1, "c": -1, "cs": 1, "as": 1}
_LETTER_RIGHT_W = {"a": 1, "c": -1, "cs": 1, "as": -1}  # d_K = q^(w/2)


def _mul_terms(x: RatTerms, y: RatTerms) -> RatTerms:
    out: RatTerms = {}
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            c = c1 * c2
            for m3, r in mono_mul(m1, m2).items():
                add_rat(out, m3, c * r)
    return out


def _split(m: Monomial):
    ls = letters(m)
    return ls[0], monomial_from_letters(ls[1:])


@lru_cache(maxsize=None)
def _left_mono(letter: str, m: Monomial) -> RatTerms:
    if m == ONE:
        return {}
    g, rest = _split(m)
    out: RatTerms = {}
    # (E|>g)(K|>rest)
    first = _LEFT_TABLE[letter][g]
    if first:
        for mm, r in _mul_terms(first, {rest: sp(left_weight2(rest))}).items():
            add_rat(out, mm, r)
    # (K^-1|>g)(E|>rest)
    second = _left_mono(letter, rest)
    if second:
        g_mono = monomial_from_letters([g])
        for mm, r in _mul_terms({g_mono: sp(-_LETTER_LEFT_W[g])}, second).items():
            add_rat(out, mm, r)
    return out


@lru_cache(maxsize=None)
def _right_mono(letter: str, m: Monomial) -> RatTerms:
    if m == ONE:
        return {}
    g, rest = _split(m)
    out: RatTerms = {}
    # d_K(g) d_E(rest)
    second = _right_mono(letter, rest)
    if second:
        g_mono = monomial_from_letters([g])
        for mm, r in _mul_terms({g_mono: sp(_LETTER_RIGHT_W[g])}, second).items():
            add_rat(out, mm, r)
    # d_E(g) d_{K^-1}(rest)
    first = _RIGHT_TABLE[letter][g]
    if first:
        for mm, r in _mul_terms(first, {rest: sp(right_weight(rest))}).items():
            add_rat(out, mm, r)
    return out


def _left_letter(letter: str):
    if letter == "K":
        return lambda m: {m: sp(left_weight2(m))}
    if letter == "Kinv":
        return lambda m: {m: sp(-left_weight2(m))}
    return lambda m: _left_mono(letter, m)


def _right_letter(letter: str):
    # d_K m = q^(-N/2) m where N is the right weight
    if letter == "K":
        return lambda m: {m: sp(-right_weight(m))}
    if letter == "Kinv":
        return lambda m: {m: sp(right_weight(m))}
    return lambda m: _right_mono(letter, m)


def act_left(word, x: AlgebraElement) -> AlgebraElement:
    """f |> x for a generator word f."""
    for g in reversed(normalize_word(word)):
        x = x.map_monomials(_left_letter(g))
    return x


def act_right(word, x: AlgebraElement) -> AlgebraElement:
    """d_f(x) for a generator word f."""
    for g in reversed(normalize_word(word)):
        x = x.map_monomials(_right_letter(g))
    return x


# ---------------------------------------------------------------- spin reps

Matrix = List[List[Scalar]]


def spin_indices(l) -> List[Fraction]:
    l = Fraction(l)
    n = int(2 * l) + 1
    return [-l + i for i in range(n)]


def identity_matrix(n: int) -> Matrix:
    return [[Scalar(1) if i == j else Scalar() for j in range(n)] for i in range(n)]


def matmul(x: Matrix, y: Matrix) -> Matrix:
    n, m, p = len(x), len(y), len(y[0]) if y else 0
    return [[sum((x[i][t] * y[t][j] for t in range(m)), Scalar()) for j in range(p)]
            for i in range(n)]


def _generator_matrix(l, g: str) -> Matrix:
    idx = spin_indices(l)
    n = len(idx)
    out = [[Scalar() for _ in range(n)] for _ in range(n)]
    for col, k in enumerate(idx):
        if g == "K":
            out[col][col] = Scalar.q(k)
        elif g == "Kinv":
            out[col][col] = Scalar.q(-k)
        elif g == "E" and col + 1 < n:
            out[col + 1][col] = alpha(l, k)
        elif g == "F" and col > 0:
            out[col - 1][col] = alpha(l, k - 1)
    return out


def rep_matrix(l, word) -> Matrix:
    """sigma_l(w); rows and columns indexed by -l, ..., l."""
    out = identity_matrix(int(2 * Fraction(l)) + 1)
    for g in normalize_word(word):
        out = matmul(out, _generator_matrix(l, g))
    return out


def _rho_generator(l, g: str) -> Matrix:
    # rho(g) = sigma(K^-1 S(g) K): rho(E) = -sigma(E), rho(F) = -sigma(F), rho(K^+-1) = sigma(K^-+1)
    if g in ("E", "F"):
        return [[-c for c in row] for row in _generator_matrix(l, g)]
    return _generator_matrix(l, "Kinv" if g == "K" else "K")


def rho_matrix(l, word) -> Matrix:
    """rho°_l(w) = sigma_l(K^-1 S(w) K), an anti-representation."""
    out = identity_matrix(int(2 * Fraction(l)) + 1)
    for g in reversed(normalize_word(word)):
        out = matmul(out, _rho_generator(l, g))
    return out


def rho_block_matrix(spins: Sequence, word) -> Matrix:
    """Block-diagonal rho° for a direct sum of spins."""
    blocks = [rho_matrix(l, word) for l in spins]
    n = sum(len(b) for b in blocks)
    out = [[Scalar() for _ in range(n)] for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, c in enumerate(row):
                out[off + i][off + j] = c
        off += len(b)
    return out


def qcommutator_check(l) -> bool:
    """KE = qEK, FK = qKF and EF - FE = (K^2 - K^-2)/(q - q^-1) in sigma_l."""
    E, F, K = (rep_matrix(l, g) for g in ("E", "F", "K"))
    K2, Km2 = rep_matrix(l, "K^2"), rep_matrix(l, "K^-2")
    q = Scalar.q(1)
    n = len(E)

    def sub(x, y):
        return [[x[i][j] - y[i][j] for j in range(n)] for i in range(n)]

    def sc(c, x):
        return [[c * v for v in row] for row in x]

    ok = sub(matmul(K, E), sc(q, matmul(E, K))) == sc(Scalar(), E)
    ok &= sub(matmul(F, K), sc(q, matmul(K, F))) == sc(Scalar(), E)
    rhs = sc((q - q.inverse()).inverse(), sub(K2, Km2))
    ok &= sub(matmul(E, F), matmul(F, E)) == rhs
    return ok


# ---------------------------------------------------------------- ad_R

# three-fold coproducts: list of (coefficient, (f1, f2, f3)) words
_DELTA2 = {
    "K": [(Scalar(1), ("K", "K", "K"))],
    "Kinv": [(Scalar(1), ("Kinv", "Kinv", "Kinv"))],
    "E": [(Scalar(1), ("E", "K", "K")), (Scalar(1), ("Kinv", "E", "K")),
          (Scalar(1), ("Kinv", "Kinv", "E"))],
    "F": [(Scalar(1), ("F", "K", "K")), (Scalar(1), ("Kinv", "F", "K")),
          (Scalar(1), ("Kinv", "Kinv", "F"))],
}
# S^-1 and S^-2 on single letters, as (scalar, letter)
_S_INV = {"E": (-Scalar.q(-1), "E"), "F": (-Scalar.q(1), "F"),
          "K": (Scalar(1), "Kinv"), "Kinv": (Scalar(1), "K")}
_S_INV2 = {"E": (Scalar.q(-2), "E"), "F": (Scalar.q(2), "F"),
           "K": (Scalar(1), "K"), "Kinv": (Scalar(1), "Kinv")}


def ad_R(letter: str, X, spins: Sequence, act) -> list:
    """ad°_R(letter)(X) for a square matrix X of algebra elements.

    ``act(word, element)`` is the left action on entries; ``spins`` lists the
    blocks of the attached rho°.
    """
    n = len(X)
    zero = X[0][0] - X[0][0]
    out = [[zero for _ in range(n)] for _ in range(n)]
    for coef, (f1, f2, f3) in _DELTA2[letter]:
        c1, g1 = _S_INV[f1]
        c2, g2 = _S_INV2[f2]
        left = rho_block_matrix(spins, [g1])
        right = rho_block_matrix(spins, [f3])
        mid = [[act([g2], e) for e in row] for row in X]
        c = coef * c1 * c2
        for i in range(n):
            for j in range(n):
                acc = zero
                for s in range(n):
                    if left[i][s].is_zero():
                        continue
                    for t in range(n):
                        if right[t][j].is_zero() or mid[s][t].is_zero():
                            continue
                        acc = acc + mid[s][t].scale(left[i][s] * right[t][j])
                out[i][j] = out[i][j] + acc.scale(c)
    return out


def ad_R_invariance_check(X) -> bool:
    """True iff ad°_R(g)(X) = eps(g) X for the Hopf generators g."""
    from .podles import PodlesElement, pact_left
    entries = X.entries
    sample = entries[0][0]
    act = pact_left if isinstance(sample, PodlesElement) else act_left
    for g in LETTERS:
        res = ad_R(g, entries, X.spins, act)
        expected = [[e if g in ("K", "Kinv") else e - e for e in row] for row in entries]
        if res != expected:
            return False
    return True
