from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qpodles.hopf import act_left, act_right
from qpodles.scalar import Scalar, eval_numeric, qint
from qpodles.suq2 import (
    AlgebraElement, alpha, counit, expand_in_v, gen, grade_component, haar, inner,
    monomial, multiply, star, theta, theta_inverse, v_basis,
)

q = Scalar.q
HALF = Fraction(1, 2)
a, c, a_s, c_s = gen("a"), gen("c"), gen("as"), gen("cs")
one = AlgebraElement.scalar(1)

monomials = st.tuples(st.integers(-2, 2), st.integers(0, 2), st.integers(0, 2)).map(monomial)
elements = st.lists(st.tuples(monomials, st.integers(-2, 2)), min_size=1, max_size=3).map(
    lambda parts: sum((m.scale(k) for m, k in parts), AlgebraElement()))


def test_multiply_examples():
    assert multiply(c, a) == (a * c).scale(q(-1))
    assert multiply(a, a_s) == one - (c * c_s).scale(q(2))
    assert multiply(a, one) == a


def test_defining_relations():
    assert a * c == (c * a).scale(q(1))
    assert a * c_s == (c_s * a).scale(q(1))
    assert c * c_s == c_s * c
    assert a_s * a + c_s * c == one
    assert a * a_s + (c * c_s).scale(q(2)) == one


@settings(max_examples=25)
@given(monomials, monomials, monomials)
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(elements, elements)
def test_star_is_an_antilinear_antihomomorphism(x, y):
    assert star(star(x)) == x
    assert star(x * y) == star(y) * star(x)
    assert star(x + y) == star(x) + star(y)


@given(elements, elements)
def test_counit_is_a_character(x, y):
    assert counit(x * y) == counit(x) * counit(y)


def test_counit_examples():
    assert counit(a) == 1
    assert counit(c_s * c) == 0
    assert counit(one) == 1


def test_haar_examples():
    assert haar(one) == 1
    assert haar(c) == 0
    assert haar(c_s * c) == (Scalar(1) + q(2)).inverse()
    # a*a = 1 - c*c
    assert haar(a_s * a) == q(2) / (Scalar(1) + q(2))


@given(monomials, monomials)
def test_haar_is_a_twisted_trace(x, y):
    assert haar(x * y) == haar(theta(y) * x)


@given(elements)
def test_haar_is_positive_on_squares(x):
    value = haar(star(x) * x)
    if not x.is_zero():
        assert eval_numeric(value, Fraction(1, 2)) > 0


def test_theta_examples():
    assert theta(one) == one
    assert theta(a) == a.scale(q(2))
    assert theta(c_s) == c_s


@given(elements, elements)
def test_theta_is_an_automorphism(x, y):
    assert theta(x * y) == theta(x) * theta(y)
    assert theta_inverse(theta(x)) == x
    # theta(x)* = theta^-1(x*)
    assert star(theta(x)) == theta_inverse(star(x))


def test_grade_component_examples():
    assert grade_component(c, 1) == c
    assert grade_component(c, 0) == 0
    assert grade_component(c_s * c, 0) == c_s * c


@given(elements)
def test_grade_components_sum_back(x):
    parts = [grade_component(x, N) for N in range(-8, 9)]
    assert sum(parts, AlgebraElement()) == x
    for N, part in zip(range(-8, 9), parts):
        # K^2 acts by q^-N on M_N
        assert act_right("K^2", part) == part.scale(q(-N))


def test_v_basis_examples():
    assert v_basis(0, 0, 0) == one
    r2 = Scalar.sqrt(qint(2))
    assert v_basis(HALF, -HALF, -HALF) == a.scale(r2 * q(-HALF))
    assert v_basis(HALF, HALF, -HALF) == c.scale(r2 * q(HALF))


def test_v_basis_rejects_bad_indices():
    with pytest.raises(ValueError):
        v_basis(HALF, 1, HALF)
    with pytest.raises(ValueError):
        v_basis(1, HALF, 0)


def _labels(L):
    out = []
    l = Fraction(0)
    while l <= L:
        idx = [-l + i for i in range(int(2 * l) + 1)]
        out += [(l, j, k) for j in idx for k in idx]
        l += HALF
    return out


def test_v_basis_is_orthonormal_up_to_spin_one():
    labels = _labels(1)
    vs = {lab: v_basis(*lab) for lab in labels}
    for s in labels:
        for t in labels:
            assert inner(vs[s], vs[t]) == (1 if s == t else 0), (s, t)


@pytest.mark.parametrize("l", [HALF, Fraction(1), Fraction(3, 2)])
def test_derivatives_on_v_basis(l):
    idx = [-l + i for i in range(int(2 * l) + 1)]
    for j in idx:
        for k in idx:
            v = v_basis(l, j, k)
            assert act_right("K", v) == v.scale(q(-j))
            lower = v_basis(l, j - 1, k).scale(-alpha(l, j - 1)) if j > -l else AlgebraElement()
            upper = v_basis(l, j + 1, k).scale(-alpha(l, j)) if j < l else AlgebraElement()
            assert act_right("E", v) == lower
            assert act_right("F", v) == upper
            assert act_left("K", v) == v.scale(q(k))


def test_alpha_at_the_shifted_index():
    # alpha^l_{-1/2} = [l + 1/2] for half-odd l
    for l in (HALF, Fraction(3, 2), Fraction(5, 2)):
        assert alpha(l, -HALF) == qint(l + HALF)


def test_expand_in_v_examples():
    assert expand_in_v(one, 0) == [(0, 0, 0, Scalar(1))]
    r2 = Scalar.sqrt(qint(2))
    assert expand_in_v(a, HALF) == [(HALF, -HALF, -HALF, r2.inverse() * q(HALF))]
    parts = expand_in_v(c_s * c, 1)
    assert {p[0] for p in parts} == {0, 1}
    assert parts[0][:3] == (0, 0, 0) and parts[0][3] == (Scalar(1) + q(2)).inverse()


@settings(max_examples=20)
@given(st.tuples(st.integers(-1, 1), st.integers(0, 1), st.integers(0, 1)).map(monomial))
def test_expand_in_v_reconstructs(x):
    # check=True raises on any residual
    parts = expand_in_v(x, 2)
    assert all(not coef.is_zero() for *_, coef in parts)


def test_expand_in_v_detects_small_cutoff():
    with pytest.raises(ValueError, match="residual"):
        expand_in_v(a * a, HALF)
