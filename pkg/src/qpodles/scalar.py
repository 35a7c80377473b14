"""Exact scalars: rational functions in s = q^(1/2), extended by square roots.

A ``Scalar`` is a finite sum ``coef_i * sqrt(r_i)`` where every coefficient is a
rational function of ``s`` and every radicand ``r_i`` is a polynomial in ``q``
kept in canonical form (squarefree, primitive, positive leading coefficient,
nonzero constant term) times a squarefree positive integer.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple, Union

import mpmath
from flint import fmpq, fmpq_poly, fmpz, fmpz_poly

# radicand = (squarefree positive integer, coefficients of a primitive
# squarefree polynomial in q, low degree first)
Radicand = Tuple[int, Tuple[int, ...]]
ONE_RADICAND: Radicand = (1, (1,))

_S = fmpq_poly([0, 1])
_ONE_POLY = fmpq_poly([1])


def _poly_key(p: fmpq_poly) -> tuple:
    return tuple(p.coeffs())


class RatFunc:
    """Reduced quotient num/den of polynomials in s with monic denominator."""

    __slots__ = ("num", "den", "_key")

    def __init__(self, num, den=None, _reduced: bool = False):
        if not isinstance(num, fmpq_poly):
            items = num if isinstance(num, (list, tuple)) else [num]
            num = fmpq_poly([_to_fmpq(c) for c in items])
        if den is None:
            den = _ONE_POLY
        elif not isinstance(den, fmpq_poly):
            items = den if isinstance(den, (list, tuple)) else [den]
            den = fmpq_poly([_to_fmpq(c) for c in items])
        if not _reduced:
            if den.is_zero():
                raise ZeroDivisionError("rational function with zero denominator")
            if num.is_zero():
                den = _ONE_POLY
            elif den.degree() > 0:
                g = num.gcd(den)
                if g.degree() > 0:
                    num = num // g
                    den = den // g
            lc = den.leading_coefficient()
            if lc != 1:
                num = num / lc
                den = den / lc
        self.num = num
        self.den = den
        self._key = None

    # construction helpers
    @staticmethod
    def spow(k: int) -> "RatFunc":
        """s**k for any integer k."""
        if k >= 0:
            return RatFunc(_S ** k, _ONE_POLY, True)
        return RatFunc(_ONE_POLY, _S ** (-k), True)

    def key(self) -> tuple:
        if self._key is None:
            self._key = (_poly_key(self.num), _poly_key(self.den))
        return self._key

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RatFunc(_to_fmpq(other))
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def __neg__(self):
        return RatFunc(-self.num, self.den, True)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.den == other.den:
            if self.den.degree() == 0:
                return RatFunc(self.num + other.num, self.den, True)
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if self.den.degree() == 0 and other.den.degree() == 0:
            return RatFunc(self.num * other.num, _ONE_POLY, True)
        return RatFunc(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, True)

    def is_even(self) -> bool:
        """True if this is a function of q alone (only even powers of s)."""
        return all(c == 0 for c in self.num.coeffs()[1::2]) and all(
            c == 0 for c in self.den.coeffs()[1::2])

    def substitute_q(self, q0: fmpq):
        """Split evaluation: returns (num_even, num_odd, den_even, den_odd) at s^2 = q0."""
        def parts(p):
            cs = p.coeffs()
            even = fmpq_poly(cs[0::2])(q0) if cs[0::2] else fmpq(0)
            odd = fmpq_poly(cs[1::2])(q0) if cs[1::2] else fmpq(0)
            return even, odd
        return parts(self.num) + parts(self.den)

    def eval_mp(self, q0: fmpq, sqrt_q0):
        ne, no, de, do = self.substitute_q(q0)
        num = _mpq(ne) + sqrt_q0 * _mpq(no)
        den = _mpq(de) + sqrt_q0 * _mpq(do)
        return num / den

    def __repr__(self):
        return f"RatFunc({_ratfunc_text(self)})"


def _to_fmpq(x) -> fmpq:
    if isinstance(x, fmpq):
        return x
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return fmpq(x)
    if isinstance(x, str):
        f = Fraction(x)
        return fmpq(f.numerator, f.denominator)
    raise TypeError(f"cannot convert {x!r} to a rational")


def _mpq(x: fmpq):
    return mpmath.mpf(int(x.p)) / int(x.q)


def _q_to_s(p: fmpz_poly) -> fmpq_poly:
    """Substitute q = s^2 into an integer polynomial."""
    out = []
    for c in p.coeffs():
        out.extend([c, 0])
    return fmpq_poly(out[:-1] if out else [0])


# ---------------------------------------------------------------- radicals

def _squarefree_int(n: int) -> Tuple[int, int]:
    """n = f^2 * g with g squarefree; returns (f, g)."""
    f, g = 1, 1
    for p, e in fmpz(n).factor():
        p = int(p)
        f *= p ** (e // 2)
        if e % 2:
            g *= p
    return f, g


@lru_cache(maxsize=None)
def _sqrt_qpoly(coeffs: Tuple[Fraction, ...]) -> Tuple[RatFunc, Radicand]:
    """sqrt of a polynomial in q (given by rational coefficients, low first).

    Returns (c, r) with sqrt(poly) = c * sqrt(r), c a rational function in s.
    """
    m = 0
    while coeffs[m] == 0:
        m += 1
    poly = fmpq_poly([_to_fmpq(c) for c in coeffs[m:]])
    numer = poly.numer()
    denom = int(poly.denom())
    content = int(numer.content())
    prim = fmpz_poly([c // content for c in numer.coeffs()])
    if prim.coeffs()[-1] < 0:
        prim = -prim
        content = -content
    if content < 0:
        raise ValueError("square root of a polynomial with negative leading coefficient")
    # rational content content/denom = f^2 g / denom^2
    f, g = _squarefree_int(content * denom)
    _, factors = prim.factor_squarefree()
    extracted = fmpz_poly([1])
    for p, e in factors:
        extracted *= p ** (e // 2)
    radicand_poly = prim // (extracted * extracted)
    if radicand_poly.coeffs()[-1] < 0:  # cannot happen for a square divisor, kept as guard
        raise ArithmeticError("sign error in squarefree extraction")
    coef = RatFunc(_q_to_s(extracted) * fmpq(f, denom)) * RatFunc.spow(m)
    return coef, (g, tuple(int(c) for c in radicand_poly.coeffs()))


@lru_cache(maxsize=None)
def _radicand_product(r1: Radicand, r2: Radicand) -> Tuple[RatFunc, Radicand]:
    """sqrt(r1)*sqrt(r2) = c * sqrt(r3)."""
    g1, p1 = r1
    g2, p2 = r2
    gi = _gcd(g1, g2)
    gint = (g1 // gi) * (g2 // gi)
    f1 = fmpz_poly(list(p1))
    f2 = fmpz_poly(list(p2))
    d = f1.gcd(f2)
    if d.coeffs()[-1] < 0:
        d = -d
    rest = (f1 // d) * (f2 // d)
    coef = RatFunc(_q_to_s(d) * gi)
    return coef, (gint, tuple(int(c) for c in rest.coeffs()))


def _gcd(a: int, b: int) -> int:
    import math
    return math.gcd(a, b)


def _radicand_sort_key(r: Radicand):
    return (len(r[1]), r[1], r[0])


def _radicand_value(r: Radicand, q0: fmpq) -> fmpq:
    return fmpq(r[0]) * fmpz_poly(list(r[1]))(q0)


# ---------------------------------------------------------------- Scalar

Number = Union[int, Fraction, "Scalar", RatFunc]


class Scalar:
    """Element of Q(q^(1/2)) extended by square roots of polynomials in q."""

    __slots__ = ("terms", "_hash")

    def __init__(self, value: Union[int, Fraction, RatFunc, Dict[Radicand, RatFunc], None] = 0):
        self._hash = None
        if isinstance(value, dict):
            self.terms = {r: c for r, c in value.items() if not c.is_zero()}
        elif isinstance(value, RatFunc):
            self.terms = {} if value.is_zero() else {ONE_RADICAND: value}
        elif value is None:
            self.terms = {}
        else:
            f = _to_fmpq(value)
            self.terms = {} if f == 0 else {ONE_RADICAND: RatFunc(fmpq_poly([f]), _ONE_POLY, True)}

    # constructors
    @staticmethod
    def q(power: Union[int, Fraction] = 1) -> "Scalar":
        """q**power with power an integer or half-integer."""
        twice = Fraction(power) * 2
        if twice.denominator != 1:
            raise ValueError("only half-integer powers of q are representable")
        return Scalar(RatFunc.spow(int(twice)))

    @staticmethod
    def coerce(x: Number) -> "Scalar":
        return x if isinstance(x, Scalar) else Scalar(x)

    @staticmethod
    def sqrt(x: Number) -> "Scalar":
        """Principal square root of a rational Scalar that is a function of q."""
        x = Scalar.coerce(x)
        if x.is_zero():
            return Scalar()
        if not x.is_rational():
            raise ValueError("square root of a radical Scalar is not supported")
        rf = x.terms[ONE_RADICAND]
        # sqrt(N/D) = sqrt(N*D)/D
        prod = rf.num * rf.den
        cs = prod.coeffs()
        if any(c != 0 for c in cs[1::2]):
            raise ValueError("radicand must be a function of q, not of q^(1/2)")
        qcoeffs = tuple(Fraction(int(c.p), int(c.q)) for c in cs[0::2])
        coef, rad = _sqrt_qpoly(qcoeffs)
        coef = coef / RatFunc(rf.den)
        return Scalar({rad: coef})

    # structure
    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_RADICAND in self.terms)

    def rational_part(self) -> RatFunc:
        return self.terms.get(ONE_RADICAND, RatFunc(0))

    def radicands(self):
        return sorted(self.terms, key=_radicand_sort_key)

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((r, c.key()) for r, c in self.terms.items()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.terms == other.terms

    # arithmetic
    def __neg__(self):
        return Scalar({r: -c for r, c in self.terms.items()})

    def __add__(self, other: Number) -> "Scalar":
        other = Scalar.coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for r, c in other.terms.items():
            out[r] = out[r] + c if r in out else c
        return Scalar(out)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "Scalar":
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: Number) -> "Scalar":
        return Scalar.coerce(other) - self

    def scale(self, r: RatFunc) -> "Scalar":
        """Multiply by a rational function (no radical bookkeeping needed)."""
        if r.is_zero():
            return Scalar()
        if r.is_one():
            return self
        return Scalar({rad: c * r for rad, c in self.terms.items()})

    def __mul__(self, other: Number) -> "Scalar":
        if isinstance(other, RatFunc):
            return self.scale(other)
        other = Scalar.coerce(other)
        if self.is_rational() and other.is_rational():
            if not self.terms or not other.terms:
                return Scalar()
            return Scalar({ONE_RADICAND: self.terms[ONE_RADICAND] * other.terms[ONE_RADICAND]})
        out: Dict[Radicand, RatFunc] = {}
        for r1, c1 in self.terms.items():
            for r2, c2 in other.terms.items():
                if r1 == ONE_RADICAND:
                    extra, r3 = RatFunc(1), r2
                elif r2 == ONE_RADICAND:
                    extra, r3 = RatFunc(1), r1
                else:
                    extra, r3 = _radicand_product(r1, r2)
                val = c1 * c2 * extra
                out[r3] = out[r3] + val if r3 in out else val
        return Scalar(out)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.terms:
            raise ZeroDivisionError("division by zero")
        if len(self.terms) > 1:
            raise ArithmeticError("non-invertible in managed extension")
        (rad, c), = self.terms.items()
        if rad == ONE_RADICAND:
            return Scalar(c.inverse())
        # 1/(c sqrt(r)) = sqrt(r) / (c r)
        g, coeffs = rad
        rval = RatFunc(_q_to_s(fmpz_poly(list(coeffs))) * g)
        return Scalar({rad: (c * rval).inverse()})

    def __truediv__(self, other: Number) -> "Scalar":
        if isinstance(other, RatFunc):
            return self.scale(other.inverse())
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other: Number) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # numerics
    def eval_mp(self, q0, dps: int = 30):
        """Value at q = q0 as an mpmath number computed with ``dps`` digits."""
        q0 = _to_fmpq(q0)
        if q0 <= 0 or q0 == 1:
            raise ValueError("q0 must be positive and different from 1")
        with mpmath.workdps(dps):
            root = mpmath.sqrt(_mpq(q0))
            total = mpmath.mpf(0)
            for rad, c in self.terms.items():
                val = c.eval_mp(q0, root)
                if rad != ONE_RADICAND:
                    rv = _radicand_value(rad, q0)
                    if rv < 0:
                        raise ValueError(f"negative radicand at q0={q0}: {radicand_text(rad)}")
                    val *= mpmath.sqrt(_mpq(rv))
                total += val
            return +total

    def __float__(self):
        raise TypeError("use eval_numeric(x, q0) to evaluate a Scalar")

    def __str__(self):
        return scalar_text(self)

    def __repr__(self):
        return f"Scalar({scalar_text(self)})"


ScalarLike = Number


def eval_numeric(x: Number, q0, dps: int = 30) -> float:
    """Evaluate at q = q0; the sum is formed in ``dps`` digits, then rounded."""
    return float(Scalar.coerce(x).eval_mp(q0, dps))


# ---------------------------------------------------------------- q-numbers

def qint(m: Union[int, Fraction]) -> Scalar:
    """The q-integer [m] = (q^m - q^-m)/(q - q^-1)."""
    m = Fraction(m)
    if m.denominator == 1:
        n = int(m)
        sign = 1 if n >= 0 else -1
        n = abs(n)
        total = Scalar()
        for i in range(n):
            total = total + Scalar.q(n - 1 - 2 * i)
        return total if sign > 0 else -total
    if m.denominator != 2:
        raise ValueError("q-integers are defined here for half-integers only")
    twice = int(2 * m)
    num = RatFunc.spow(twice) - RatFunc.spow(-twice)
    den = RatFunc.spow(2) - RatFunc.spow(-2)
    return Scalar(num / den)


def qfactorial(n: int) -> Scalar:
    out = Scalar(1)
    for i in range(1, n + 1):
        out = out * qint(i)
    return out


def qbinomial(n: int, k: int) -> Scalar:
    """Gaussian binomial [n]!/([k]![n-k]!) in the symmetric normalisation."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"qbinomial needs 0 <= k <= n, got n={n}, k={k}")
    return qfactorial(n) / qfactorial(k) / qfactorial(n - k)


# ---------------------------------------------------------------- text

def _frac_text(c: fmpq) -> str:
    return str(int(c.p)) if c.q == 1 else f"{int(c.p)}/{int(c.q)}"


def _qpow_text(e2: int) -> str:
    """Text of q^(e2/2)."""
    if e2 == 2:
        return "q"
    if e2 % 2 == 0:
        return f"q^{e2 // 2}"
    return f"q^({e2}/2)"


def _laurent_text(poly: fmpq_poly, shift: int) -> str:
    """Text of poly(s) / s^shift as a Laurent polynomial in q^(1/2)."""
    cs = poly.coeffs()
    parts = []
    for i in range(len(cs) - 1, -1, -1):
        c = cs[i]
        if c == 0:
            continue
        e2 = i - shift
        neg = c < 0
        a = -c if neg else c
        if e2 == 0:
            body = _frac_text(a)
        elif a == 1:
            body = _qpow_text(e2)
        else:
            body = f"{_frac_text(a)}*{_qpow_text(e2)}"
        parts.append(("-" if neg else "+", body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _split_spower(p: fmpq_poly) -> Tuple[fmpq_poly, int]:
    cs = p.coeffs()
    m = 0
    while m < len(cs) and cs[m] == 0:
        m += 1
    return fmpq_poly(cs[m:]), m


def _ratfunc_text(r: RatFunc) -> str:
    if r.is_zero():
        return "0"
    den, shift = _split_spower(r.den)
    num_text = _laurent_text(r.num, shift)
    if den.degree() == 0:
        lc = den.coeffs()[0]
        if lc == 1:
            return num_text
        return _laurent_text(r.num / lc, shift)
    return f"({num_text})/({_laurent_text(den, 0)})"


def radicand_text(rad: Radicand) -> str:
    g, coeffs = rad
    poly_text = _laurent_text(_q_to_s(fmpz_poly(list(coeffs))), 0)
    if g == 1:
        return poly_text
    if coeffs == (1,):
        return str(g)
    return f"{g}*({poly_text})"


def _is_simple(text: str) -> bool:
    return " " not in text and "/(" not in text


def scalar_text(x: Scalar) -> str:
    """Canonical text; re-parses to an equal Scalar."""
    if not x.terms:
        return "0"
    pieces = []
    for rad in x.radicands():
        c = x.terms[rad]
        ct = _ratfunc_text(c)
        if rad == ONE_RADICAND:
            pieces.append(ct)
        elif c.is_one():
            pieces.append(f"sqrt({radicand_text(rad)})")
        else:
            pieces.append(f"({ct})*sqrt({radicand_text(rad)})")
    return " + ".join(pieces)


def coefficient_prefix(x: Scalar) -> str:
    """Prefix used when printing ``x * monomial``; empty for 1."""
    if x == 1:
        return ""
    if x == -1:
        return "-"
    t = scalar_text(x)
    if _is_simple(t) and "/" not in t:
        return t + "*"
    neg = scalar_text(-x)
    if _is_simple(neg) and "/" not in neg:
        return f"-{neg}*"
    return f"({t})*"

