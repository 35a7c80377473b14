from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qpodles.cyclic import Chain, eta
from qpodles.hopf import act_right
from qpodles.podles import PodlesElement, embed, pgen
from qpodles.scalar import Scalar, eval_numeric, qint
from qpodles.spectral import (
    SpinorModel, WeightBasis, dirac_spectrum, index_and_qindex, index_report,
    kernel_dimensions, kernel_lemma_check, multiply_vector, partial_matrices, pi_D,
    poincare_pairing, real_structure_check,
)
from qpodles.suq2 import expand_in_v, multiply, v_basis

q = Scalar.q
HALF = Fraction(1, 2)
Q0 = Fraction(1, 2)
one = PodlesElement.scalar(1)


# ---------------------------------------------------------------- spectrum

def test_spectrum_at_lowest_spin():
    assert dirac_spectrum(HALF) == [(Scalar(1), 2), (Scalar(-1), 2)]


def test_spectrum_values_and_symmetry():
    spec = dirac_spectrum(Fraction(11, 2))
    expected = []
    for n in range(1, 7):
        expected += [(qint(n), 2 * n), (-qint(n), 2 * n)]
    assert spec == expected


def test_spectrum_against_numeric_diagonalization():
    L = Fraction(7, 2)
    D = SpinorModel.build(L, Q0).dirac()
    assert np.allclose(D, D.T)
    numeric = np.sort(np.linalg.eigvalsh(D))
    exact = sorted(x for value, mult in dirac_spectrum(L)
                   for x in [eval_numeric(value, Q0)] * mult)
    assert np.allclose(numeric, exact, rtol=1e-12, atol=0)


def test_spectrum_rejects_empty_range():
    with pytest.raises(ValueError):
        dirac_spectrum(0)


# ---------------------------------------------------------------- partial derivatives

def test_weight_basis_labels():
    basis = WeightBasis.build(1, Fraction(3, 2))
    assert basis.labels == ((HALF, -HALF), (HALF, HALF),
                            (Fraction(3, 2), Fraction(-3, 2)), (Fraction(3, 2), -HALF),
                            (Fraction(3, 2), HALF), (Fraction(3, 2), Fraction(3, 2)))
    assert basis.j == HALF and len(basis) == 6


def test_partial_matrix_examples():
    E, F = partial_matrices(1, Fraction(5, 2))
    # the spin-1/2 columns of dF on M_1 vanish
    assert all(F[r][c].is_zero() for r in range(len(F)) for c in (0, 1))
    E0, _ = partial_matrices(0, 2)
    assert all(row[0].is_zero() for row in E0)


@pytest.mark.parametrize("N", range(-3, 4))
def test_dE_is_the_adjoint_of_dF(N):
    L = Fraction(abs(N), 2) + 3
    _, F = partial_matrices(N, L)
    E, _ = partial_matrices(N + 2, L)
    assert E == [list(col) for col in zip(*F)]


@pytest.mark.parametrize("N", range(-2, 3))
def test_partial_matrices_match_the_algebra(N):
    # compare with the derivations acting on actual v-basis elements
    L = Fraction(abs(N), 2) + 1
    src = WeightBasis.build(N, L)
    E, F = partial_matrices(N, L)
    for letter, mat, target in (("E", E, N - 2), ("F", F, N + 2)):
        dst = WeightBasis.build(target, L)
        for col, (l, k) in enumerate(src.labels):
            image = act_right(letter, v_basis(l, src.j, k))
            expected = sum((v_basis(l2, dst.j, k2).scale(mat[r][col])
                            for r, (l2, k2) in enumerate(dst.labels)), image - image)
            assert image == expected


def test_kernel_lemma_examples():
    assert kernel_lemma_check(2, 4) and kernel_dimensions(2, 4)["F"] == 3
    assert kernel_lemma_check(-1, 4) and kernel_dimensions(-1, 4)["F"] == 0
    assert kernel_lemma_check(0, 4) and kernel_dimensions(0, 4) == {"E": 1, "F": 1}
    with pytest.raises(ValueError):
        kernel_lemma_check(2, 2)


@pytest.mark.parametrize("N", range(-3, 4))
def test_kernel_lemma(N):
    assert kernel_lemma_check(N, Fraction(abs(N), 2) + 3)


# ---------------------------------------------------------------- products and pi_D

@given(st.sampled_from(["A", "B", "Bs"]), st.sampled_from([HALF, Fraction(3, 2)]),
       st.sampled_from([-HALF, HALF]), st.integers(0, 1))
def test_multiply_vector_matches_expansion(name, l, j, idx):
    k = [-HALF, HALF][idx]
    x = embed(pgen(name))
    direct = {(l2, j2, k2): c
              for l2, j2, k2, c in expand_in_v(multiply(x, v_basis(l, j, k)), l + 1)}
    assert multiply_vector(x, l, j, k) == direct


def test_pi_D_examples():
    assert pi_D(eta()) == (one.scale(q(-1)), one.scale(-q(1)))
    zero = PodlesElement()
    assert pi_D(Chain.tensor(one, one, one)) == (zero, zero)
    with pytest.raises(ValueError):
        pi_D(Chain.tensor(one, one))


@pytest.mark.parametrize("name", ["A", "B", "Bs"])
def test_commutator_with_D_is_off_diagonal(name):
    # [D, a] = offdiag(q^(1/2) dE(a), q^(-1/2) dF(a))
    L = Fraction(9, 2)
    model = SpinorModel.build(L, Q0)
    a = embed(pgen(name))
    D, M = model.dirac(), model.multiplication(a)
    comm = D @ M - M @ D
    dE, dF = act_right("E", a), act_right("F", a)
    lower = model.multiplication(dF) if dF else np.zeros_like(D)
    upper = model.multiplication(dE) if dE else np.zeros_like(D)
    s = np.sqrt(float(Q0))
    cols = model.interior(2)
    assert np.allclose((comm - upper * s - lower / s)[:, cols], 0, atol=1e-12)


# ---------------------------------------------------------------- real structure

def test_real_structure():
    report = real_structure_check("7/2", "1/2")
    for name, r in report.items():
        assert r["pass"], (name, r["residual"])


def test_real_structure_sampled_subset():
    report = real_structure_check("5/2", "1/3", samples=10, seed=3)
    assert all(r["pass"] for r in report.values())


def test_unsigned_conjugation_is_not_a_real_structure():
    # negative control: without the (-1)^(k-j) signs J no longer commutes with D
    model = SpinorModel.build(Fraction(7, 2), Q0)
    D = model.dirac()
    cols = model.interior(1)
    for J in (model.real_structure(), model.grading() @ np.abs(model.j0())):
        assert np.allclose((J @ J + np.eye(len(J)))[:, cols], 0)
    J = model.grading() @ np.abs(model.j0())
    assert np.max(np.abs((J @ D - D @ J)[:, cols])) > 1.0


def test_real_structure_needs_room():
    with pytest.raises(ValueError):
        real_structure_check("3/2", "1/2")


# ---------------------------------------------------------------- index

def test_index_examples():
    ind, qind = index_and_qindex(1, Fraction(9, 2), Q0, 1e-8)
    assert ind == 1 and qind == pytest.approx(1.0, abs=1e-6)
    ind, qind = index_and_qindex(0, 4, Q0, 1e-8)
    assert ind == 0 and qind == pytest.approx(0.0, abs=1e-6)


@pytest.mark.slow
def test_index_at_two():
    report = index_report(2, 5, Q0)
    assert report.ind == 2 and report.qind == pytest.approx(2.5, abs=1e-6)
    assert sum(report.cokernel.values()) == 0
    assert report.margin > 1e-6


def test_index_for_negative_degree_has_only_cokernel():
    report = index_report(-1, Fraction(9, 2), Q0)
    assert report.ind == -1 and not report.kernel
    assert report.qind == pytest.approx(-1.0, abs=1e-6)


def test_index_rejects_bad_arguments():
    with pytest.raises(ValueError):
        index_report(1, 2, Q0)
    with pytest.raises(ValueError):
        index_report(1, 5, 2)


# ---------------------------------------------------------------- Poincaré pairing

def test_poincare_examples():
    assert poincare_pairing(1, 1, 1, 0) == 1
    assert poincare_pairing(1, 0, 1, 0) == 0
    # lm - kn at (2, 1, 1, 1)
    assert poincare_pairing(2, 1, 1, 1) == -1


ints = st.integers(-20, 20)


@given(ints, ints, ints, ints, ints, ints, ints)
def test_poincare_is_bilinear_and_antisymmetric(k, l, m, n, r, s, c):
    assert poincare_pairing(k, l, m, n) == -poincare_pairing(m, n, k, l)
    assert poincare_pairing(k + r, l + s, m, n) == \
        poincare_pairing(k, l, m, n) + poincare_pairing(r, s, m, n)
    assert poincare_pairing(c * k, c * l, m, n) == c * poincare_pairing(k, l, m, n)
