from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qpodles.cyclic import solve_chi
from qpodles.expr import ParseError, parse, parse_algebra, parse_podles, parse_scalar
from qpodles.podles import PodlesElement, embed, pgen, pmonomial
from qpodles.scalar import Scalar, qint
from qpodles.suq2 import AlgebraElement, alpha, gen, monomial, v_basis

q = Scalar.q
A, B, Bs = pgen("A"), pgen("B"), pgen("Bs")
HALF = Fraction(1, 2)


def test_examples():
    assert parse("Bs*B") == A - A * A
    assert parse("1") == Scalar(1)
    assert parse("[2]*A") == A.scale(q(1) + q(-1))


def test_result_type_is_the_smallest_container():
    assert isinstance(parse("q + [3]"), Scalar)
    assert isinstance(parse("A + 1"), PodlesElement)
    assert isinstance(parse("A + a"), AlgebraElement)
    assert parse("A + a") == embed(A) + gen("a")


def test_precedence_and_powers():
    assert parse("2 + 3*q^2") == Scalar(2) + Scalar(3) * q(2)
    assert parse("-q^-1") == -q(-1)
    assert parse("q^(-3/2)") == q(Fraction(-3, 2))
    assert parse("(A + B)^2") == (A + B) * (A + B)
    assert parse("[5/2]") == qint(Fraction(5, 2))
    assert parse("[-2]") == -qint(2)
    assert parse("sqrt([3])/q") == Scalar.sqrt(qint(3)) * q(-1)


@pytest.mark.parametrize("text, offset", [
    ("A/B", 1), ("x", 0), ("2^^3", 2), ("[2", 2), ("sqrt(A)", 0), ("q^(1/2", 6),
    ("a^-1", 1), ("1/0", 1), ("A $ B", 2), ("(1", 2), ("1 2", 2), ("A^(1/2)", 1),
])
def test_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset


def test_typed_entry_points():
    assert parse_podles("1") == PodlesElement.scalar(1)
    assert parse_algebra("A") == embed(A)
    assert parse_scalar("[2]") == qint(2)
    with pytest.raises(ValueError):
        parse_podles("a")
    with pytest.raises(ValueError):
        parse_scalar("A")


small = st.integers(-3, 3)
scalars = st.builds(lambda c, e, r: Scalar(c) * q(Fraction(e, 2)) + Scalar.sqrt(qint(r)),
                    small, small, st.integers(1, 4))
pelements = st.lists(st.tuples(st.tuples(st.integers(0, 2), small), scalars),
                     min_size=1, max_size=3).map(
    lambda ps: sum((pmonomial(m).scale(c) for m, c in ps), PodlesElement()))
aelements = st.lists(st.tuples(st.tuples(small, st.integers(0, 2), st.integers(0, 2)), scalars),
                     min_size=1, max_size=3).map(
    lambda ps: sum((monomial(m).scale(c) for m, c in ps), AlgebraElement()))


@given(scalars)
def test_scalar_round_trip(x):
    assert parse(str(x)) == x


@given(pelements)
def test_podles_round_trip(x):
    assert parse_podles(str(x)) == x


@given(aelements)
def test_algebra_round_trip(x):
    assert parse_algebra(str(x)) == x


def test_round_trip_on_computed_values():
    values = [qint(Fraction(5, 2)), alpha(Fraction(3, 2), -HALF), alpha(2, 0)]
    values += list(solve_chi(4, ()).values())[:20]
    for x in values:
        assert parse_scalar(str(x)) == x
    for lab in [(HALF, HALF, -HALF), (1, 0, 1), (Fraction(3, 2), -HALF, HALF)]:
        v = v_basis(*lab)
        assert parse_algebra(str(v)) == v
