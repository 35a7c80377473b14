"""Finite linear combinations of monomials with Scalar coefficients."""
from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, Tuple, TypeVar

from .scalar import RatFunc, Scalar, coefficient_prefix

T = TypeVar("T", bound="LinearElement")
# expansion of a monomial operation: {monomial: rational coefficient}
RatTerms = Dict[Hashable, RatFunc]


def add_rat(acc: RatTerms, mono, coef: RatFunc) -> None:
    if mono in acc:
        total = acc[mono] + coef
        if total.is_zero():
            del acc[mono]
        else:
            acc[mono] = total
    elif not coef.is_zero():
        acc[mono] = coef


class LinearElement:
    """Base class: ``terms`` maps monomials to nonzero Scalars."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Hashable, Scalar] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    # subclasses provide these
    one_monomial: Hashable = None

    @classmethod
    def monomial_text(cls, mono) -> str:  # pragma: no cover - abstract
        raise NotImplementedError

    @classmethod
    def monomial_order(cls, mono):  # pragma: no cover - abstract
        raise NotImplementedError

    # construction
    @classmethod
    def from_monomial(cls: type[T], mono, coef=1) -> T:
        return cls({mono: Scalar.coerce(coef)})

    @classmethod
    def scalar(cls: type[T], coef) -> T:
        return cls({cls.one_monomial: Scalar.coerce(coef)})

    @classmethod
    def from_rat(cls: type[T], terms: RatTerms) -> T:
        return cls({m: Scalar(c) for m, c in terms.items()})

    @classmethod
    def coerce(cls: type[T], x) -> T:
        return x if isinstance(x, cls) else cls.scalar(x)

    # linear structure
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LinearElement):
            try:
                other = type(self).scalar(other)
            except TypeError:
                return NotImplemented
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self: T, other) -> T:
        other = type(self).coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self: T) -> T:
        return type(self)({m: -c for m, c in self.terms.items()})

    def __sub__(self: T, other) -> T:
        return self + (-type(self).coerce(other))

    def __rsub__(self: T, other) -> T:
        return type(self).coerce(other) - self

    def scale(self: T, c) -> T:
        c = Scalar.coerce(c)
        if c.is_zero():
            return type(self)()
        return type(self)({m: v * c for m, v in self.terms.items()})

    def map_monomials(self: T, fn: Callable[[Hashable], RatTerms]) -> T:
        """Apply a linear map given on monomials with rational coefficients."""
        out: Dict[Hashable, Scalar] = {}
        for m, c in self.terms.items():
            for m2, r in fn(m).items():
                v = c.scale(r)
                out[m2] = out[m2] + v if m2 in out else v
        return type(self)(out)

    def bilinear(self: T, other: T, fn: Callable[[Hashable, Hashable], RatTerms]) -> T:
        out: Dict[Hashable, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m3, r in fn(m1, m2).items():
                    v = c.scale(r)
                    out[m3] = out[m3] + v if m3 in out else v
        return type(self)(out)

    def coefficient(self, mono) -> Scalar:
        return self.terms.get(mono, Scalar())

    def monomials(self) -> Iterable[Tuple[Hashable, Scalar]]:
        return sorted(self.terms.items(), key=lambda mc: type(self).monomial_order(mc[0]))

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.monomials():
            mt = type(self).monomial_text(m)
            if mt == "1":
                parts.append(str(c) if " " not in str(c) else f"({c})")
            else:
                parts.append(coefficient_prefix(c) + mt)
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return text

    def __repr__(self):
        return f"{type(self).__name__}({self})"
