"""The Dirac operator on W = M_-1 (+) M_1, its spectrum, real structure and index.

Line bundles are modelled in the Peter-Weyl basis: M_N is spanned by the
orthonormal vectors v^l_{N/2,k}.  Exact Scalars are used wherever they are
cheap; rank decisions and operator identities on truncations are numeric.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import mpmath
import numpy as np

from .cyclic import Chain, wedge_parts
from .hopf import spin_indices
from .ktheory import projection_P
from .podles import PodlesElement, embed, pgen, pstar, unembed
from .scalar import Scalar
from .suq2 import AlgebraElement, alpha, degree, expand_in_v, right_weight, v_basis

Label = Tuple[Fraction, Fraction]          # (l, k)
Vector = Dict[tuple, Scalar]


def _half(x) -> Fraction:
    x = Fraction(x)
    if (2 * x).denominator != 1:
        raise ValueError(f"{x} is not a half-integer")
    return x


@dataclass(frozen=True)
class WeightBasis:
    """Labels (l, k) of v^l_{N/2,k} with |N|/2 <= l <= L."""

    N: int
    L: Fraction
    labels: Tuple[Label, ...] = field(default=())

    @staticmethod
    def build(N: int, L) -> "WeightBasis":
        L = _half(L)
        labels = []
        l = Fraction(abs(N), 2)
        while l <= L:
            labels.extend((l, k) for k in spin_indices(l))
            l += 1
        return WeightBasis(N, L, tuple(labels))

    @property
    def j(self) -> Fraction:
        return Fraction(self.N, 2)

    def __len__(self):
        return len(self.labels)

    def position(self) -> Dict[Label, int]:
        return {lab: i for i, lab in enumerate(self.labels)}


# ---------------------------------------------------------------- partial derivatives

def _d_coefficient(letter: str, l: Fraction, j: Fraction) -> Scalar:
    # dE v^l_{jk} = -alpha^l_{j-1} v^l_{j-1,k},  dF v^l_{jk} = -alpha^l_j v^l_{j+1,k}
    return -alpha(l, j - 1) if letter == "E" else -alpha(l, j)


def partial_matrices(N: int, L) -> Tuple[List[List[Scalar]], List[List[Scalar]]]:
    """Exact matrices of dE: M_N -> M_(N-2) and dF: M_N -> M_(N+2) up to spin L."""
    src = WeightBasis.build(N, L)
    out = []
    for letter, target in (("E", N - 2), ("F", N + 2)):
        dst = WeightBasis.build(target, L)
        pos = dst.position()
        mat = [[Scalar()] * len(src) for _ in range(len(dst))]
        for col, (l, k) in enumerate(src.labels):
            if (l, k) in pos:
                mat[pos[(l, k)]][col] = _d_coefficient(letter, l, src.j)
        out.append(mat)
    return out[0], out[1]


def kernel_dimensions(N: int, L) -> Dict[str, int]:
    """Kernel sizes of dE and dF on M_N read off the exact zero columns."""
    E, F = partial_matrices(N, L)
    cols = len(WeightBasis.build(N, L))

    def zero_columns(mat):
        return sum(1 for c in range(cols) if all(row[c].is_zero() for row in mat))
    return {"E": zero_columns(E), "F": zero_columns(F)}


def kernel_lemma_check(N: int, L) -> bool:
    """Kernel of dF on M_N is the lowest isotypic block for N >= 0 and zero otherwise;
    the kernel of dE is the mirror image."""
    L = _half(L)
    if L < Fraction(abs(N), 2) + 2:
        raise ValueError("need L >= |N|/2 + 2")
    dims = kernel_dimensions(N, L)
    lowest = abs(N) + 1
    return dims["F"] == (lowest if N >= 0 else 0) and dims["E"] == (lowest if N <= 0 else 0)


# ---------------------------------------------------------------- Dirac operator

def dirac_spectrum(L) -> List[Tuple[Scalar, int]]:
    """Eigenvalues of D with multiplicities for spins 1/2 <= l <= L.

    On the pair (v^l_{-1/2,k}, s v^l_{1/2,k}) with s = +-1, D acts by
    -s [l+1/2]; the coefficients are taken from ``partial_matrices``.
    """
    L = _half(L)
    if L < Fraction(1, 2):
        raise ValueError("need L >= 1/2")
    down = partial_matrices(1, L)[0]       # dE: M_1 -> M_-1
    up = partial_matrices(-1, L)[1]        # dF: M_-1 -> M_1
    basis = WeightBasis.build(1, L)
    out = []
    for l in sorted({lab[0] for lab in basis.labels}):
        i = basis.labels.index((l, -l))
        if down[i][i] != up[i][i]:
            raise ArithmeticError("dE and dF differ on W")
        value = -down[i][i]                # eigenvalue of (v, -v)
        out.append((value, int(2 * l + 1)))
        out.append((-value, int(2 * l + 1)))
    return out


def _numeric(x: Scalar, q0, dps: int = 20) -> float:
    return float(x.eval_mp(q0, dps))


@dataclass
class SpinorModel:
    """Numeric matrices on the truncation of W = M_-1 (+) M_1 at spin L."""

    L: Fraction
    q0: Fraction
    basis: Tuple[Tuple[int, Fraction, Fraction], ...]    # (slot, l, k); slot 0 = M_-1

    @staticmethod
    def build(L, q0) -> "SpinorModel":
        L = _half(L)
        labels = tuple((slot, l, k) for slot, N in ((0, -1), (1, 1))
                       for l, k in WeightBasis.build(N, L).labels)
        return SpinorModel(L, Fraction(q0), labels)

    def position(self):
        return {lab: i for i, lab in enumerate(self.basis)}

    def interior(self, margin) -> List[int]:
        return [i for i, (_, l, _) in enumerate(self.basis) if l <= self.L - margin]

    def dirac(self) -> np.ndarray:
        pos = self.position()
        D = np.zeros((len(self.basis),) * 2)
        for i, (slot, l, k) in enumerate(self.basis):
            j = Fraction(-1, 2) if slot == 0 else Fraction(1, 2)
            c = _numeric(_d_coefficient("F" if slot == 0 else "E", l, j), self.q0)
            D[pos[(1 - slot, l, k)], i] = c
        return D

    def grading(self) -> np.ndarray:
        return np.diag([1.0 if slot == 0 else -1.0 for slot, _, _ in self.basis])

    def j0(self) -> np.ndarray:
        """J0 v^l_{jk} = (-1)^(k-j) v^l_{-j,-k}; real at real q, so a signed permutation."""
        pos = self.position()
        J = np.zeros((len(self.basis),) * 2)
        for i, (slot, l, k) in enumerate(self.basis):
            j = Fraction(-1, 2) if slot == 0 else Fraction(1, 2)
            J[pos[(1 - slot, l, -k)], i] = 1.0 if int(k - j) % 2 == 0 else -1.0
        return J

    def real_structure(self) -> np.ndarray:
        return self.grading() @ self.j0()

    def multiplication(self, x: AlgebraElement) -> np.ndarray:
        """Left multiplication by x, which must have right weight 0 or +-2."""
        weights = {right_weight(m) for m in x.terms}
        if len(weights) != 1:
            raise ValueError("element must be homogeneous for the right weight")
        shift = weights.pop()
        pos = self.position()
        M = np.zeros((len(self.basis),) * 2)
        for i, (slot, l, k) in enumerate(self.basis):
            j = Fraction(-1, 2) if slot == 0 else Fraction(1, 2)
            target_j = j + Fraction(shift, 2)
            if abs(target_j) != Fraction(1, 2):
                continue
            tslot = 0 if target_j < 0 else 1
            for (l2, j2, k2), c in multiply_vector(x, l, j, k).items():
                if l2 <= self.L:
                    M[pos[(tslot, l2, k2)], i] += _numeric(c, self.q0)
        return M


@lru_cache(maxsize=None)
def _monomial_times_v(m, l: Fraction, j: Fraction, k: Fraction) -> Tuple[tuple, ...]:
    from .suq2 import monomial, multiply
    prod = multiply(monomial(m), v_basis(l, j, k))
    cut = l + Fraction(degree(m), 2)
    return tuple(((l2, j2, k2), c) for l2, j2, k2, c in expand_in_v(prod, cut))


def multiply_vector(x: AlgebraElement, l, j, k) -> Dict[tuple, Scalar]:
    """x v^l_{jk} expanded in the v-basis, keyed by (l', j', k')."""
    out: Dict[tuple, Scalar] = {}
    for m, c in x.terms.items():
        for key, v in _monomial_times_v(m, Fraction(l), Fraction(j), Fraction(k)):
            w = c * v
            out[key] = out[key] + w if key in out else w
    return {key: v for key, v in out.items() if not v.is_zero()}


# ---------------------------------------------------------------- pi_D and real structure

def pi_D(x: Chain) -> Tuple[PodlesElement, PodlesElement]:
    """Diagonal of sum a0 [D,a1][D,a2]: (part on M_-1, part on M_1).

    The q^(+-1/2) factors carried by the two off-diagonal entries of [D,a]
    cancel in every product, so the entries are a0 dE(a1) dF(a2) and
    a0 dF(a1) dE(a2).
    """
    if x.degree != 2:
        raise ValueError("pi_D needs a degree-2 chain")
    upper, lower = AlgebraElement(), AlgebraElement()
    for t, c in x.terms.items():
        u, w = wedge_parts(t)
        upper = upper + u.scale(c)
        lower = lower + w.scale(c)
    return unembed(upper), unembed(lower)


_CHECK_NAMES = ("J^2 = -1", "JD = DJ", "gamma D = -D gamma", "commutant", "first order")


def real_structure_check(L="7/2", q0="1/2", samples: Optional[int] = None,
                         tol: float = 1e-9, seed: int = 0) -> Dict[str, dict]:
    """Numeric checks of the real structure J = gamma J0 on a truncation of W.

    Matrices are assembled three spins beyond L so that every basis vector of
    spin <= L is away from the cutoff.  ``samples`` restricts the test
    vectors to a seeded random subset.
    """
    L = _half(L)
    if L < Fraction(5, 2):
        raise ValueError("need L >= 5/2")
    model = SpinorModel.build(L + 3, Fraction(q0))
    cols = model.interior(3)
    if samples is not None:
        cols = sorted(random.Random(seed).sample(cols, min(samples, len(cols))))
    D, G, J = model.dirac(), model.grading(), model.real_structure()
    Jinv = -J
    gens = {name: embed(pgen(name)) for name in ("A", "B", "Bs")}
    mult = {name: model.multiplication(x) for name, x in gens.items()}
    adjoint = {name: model.multiplication(embed(pstar(pgen(name)))) for name in gens}

    def residual(M):
        return float(np.max(np.abs(M[:, cols]))) if cols else 0.0

    report = {
        "J^2 = -1": residual(J @ J + np.eye(len(model.basis))),
        "JD = DJ": residual(J @ D - D @ J),
        "gamma D = -D gamma": residual(G @ D + D @ G),
    }
    comm, first = 0.0, 0.0
    for a in gens:
        Da = D @ mult[a] - mult[a] @ D
        for b in gens:
            right = J @ adjoint[b] @ Jinv
            comm = max(comm, residual(mult[a] @ right - right @ mult[a]))
            first = max(first, residual(Da @ right - right @ Da))
    report["commutant"] = comm
    report["first order"] = first
    return {name: {"residual": report[name], "pass": report[name] <= tol}
            for name in _CHECK_NAMES}


# ---------------------------------------------------------------- index

@dataclass
class IndexReport:
    N: int
    L: Fraction
    q0: Fraction
    ind: int
    qind: float
    kernel: Dict[Fraction, int]
    cokernel: Dict[Fraction, int]
    margin: float          # smallest singular value counted as nonzero


def _rank(columns: List[Vector], dps: int, tol: float, q0) -> Tuple[int, float]:
    if not columns:
        return 0, float("inf")
    keys = sorted({key for col in columns for key in col})
    if not keys:
        return 0, float("inf")
    pos = {key: i for i, key in enumerate(keys)}
    with mpmath.workdps(dps):
        M = mpmath.zeros(len(keys), len(columns))
        for c, col in enumerate(columns):
            for key, v in col.items():
                M[pos[key], c] = v.eval_mp(q0, dps)
        sv = mpmath.svd_r(M, compute_uv=False)
        values = sorted((float(s) for s in sv), reverse=True)
    scale = max(values[0], 1.0) if values else 1.0
    rank = sum(1 for s in values if s > tol * scale)
    for s in values:
        if tol * scale < s < 10 * tol * scale:
            raise ArithmeticError("singular values too close to the tolerance; raise the precision")
    smallest = min((s for s in values if s > tol * scale), default=float("inf"))
    return rank, smallest


class _Compression:
    """P_N d P_N on (M_j)^(|N|+1), exact on vectors, grouped by the conserved weight."""

    def __init__(self, N: int):
        self.N = N
        self.P = projection_P(N)
        self.entries = [[embed(e) for e in row] for row in self.P.entries]
        self.weights = self.P.weights()

    def apply_P(self, vec: Vector) -> Vector:
        out: Vector = {}
        for (i, l, j, k), c in vec.items():
            for r in range(len(self.entries)):
                x = self.entries[r][i]
                if x.is_zero():
                    continue
                for (l2, j2, k2), v in multiply_vector(x, l, j, k).items():
                    key = (r, l2, j2, k2)
                    w = c * v
                    out[key] = out[key] + w if key in out else w
        return {key: v for key, v in out.items() if not v.is_zero()}

    @staticmethod
    def apply_d(letter: str, vec: Vector) -> Vector:
        out: Vector = {}
        step = -1 if letter == "E" else 1
        for (i, l, j, k), c in vec.items():
            if abs(j + step) > l:
                continue
            coef = _d_coefficient(letter, l, j)
            if not coef.is_zero():
                out[(i, l, j + step, k)] = c * coef
        return out

    def domain(self, j: Fraction, cutoff: Fraction) -> Dict[Fraction, List[Vector]]:
        """Unit vectors e_i (x) v^l_{jk}, l <= cutoff, grouped by t = m_i + k."""
        blocks: Dict[Fraction, List[Vector]] = {}
        l = abs(j)
        while l <= cutoff:
            for i, m in enumerate(self.weights):
                for k in spin_indices(l):
                    blocks.setdefault(m + k, []).append({(i, l, j, k): Scalar(1)})
            l += 1
        return blocks

    def kernel_by_weight(self, letter: str, j: Fraction, cutoff: Fraction, dps, tol, q0):
        dims, margin = {}, float("inf")
        for t, vecs in sorted(self.domain(j, cutoff).items()):
            image = [self.apply_P(v) for v in vecs]
            r1, m1 = _rank(image, dps, tol, q0)
            r2, m2 = _rank([self.apply_P(self.apply_d(letter, v)) for v in image], dps, tol, q0)
            margin = min(margin, m1, m2)
            if r1 - r2:
                dims[t] = r1 - r2
        return dims, margin


def index_report(N: int, L, q0="1/2", tol: float = 1e-8, dps: int = 50) -> IndexReport:
    """Index and q-index of P_N dF P_N : P_N M_-1^(|N|+1) -> P_N M_1^(|N|+1).

    Test vectors of spin <= L - |N| are projected, so P_N maps them below
    spin L.  All products are expanded exactly, so no truncation error
    enters the ranks.  Kernel and cokernel (the kernel of P_N dE P_N) are
    counted per weight t of pi°(K) and recounted one spin lower; a change
    means the cutoff is too small.
    """
    L = _half(L)
    q0 = Fraction(q0)
    if not (0 < q0 < 1):
        raise ValueError("q0 must lie in (0, 1)")
    if L < Fraction(abs(N), 2) + 4:
        raise ValueError("need L >= |N|/2 + 4")
    cutoff = L - abs(N)
    comp = _Compression(N)
    half = Fraction(1, 2)
    results = []
    for c in (cutoff, cutoff - 1):
        ker, m1 = comp.kernel_by_weight("F", -half, c, dps, tol, q0)
        coker, m2 = comp.kernel_by_weight("E", half, c, dps, tol, q0)
        results.append((ker, coker, min(m1, m2)))
    (ker, coker, margin), (ker_low, coker_low, _) = results
    if (ker, coker) != (ker_low, coker_low):
        raise ArithmeticError("truncation unstable: raise L")
    ind = sum(ker.values()) - sum(coker.values())
    qind = sum(n * float(q0) ** float(2 * t) for t, n in ker.items())
    qind -= sum(n * float(q0) ** float(2 * t) for t, n in coker.items())
    return IndexReport(N, L, q0, ind, qind, ker, coker, margin)


def index_and_qindex(N: int, L, q0="1/2", tol: float = 1e-8) -> Tuple[int, float]:
    r = index_report(N, L, q0, tol)
    return r.ind, r.qind


# ---------------------------------------------------------------- Poincaré duality

def poincare_pairing(k: int, l: int, m: int, n: int) -> int:
    """<[(k,l)], [(m,n)]> from <(1,1),(1,0)> = 1, bilinearity and antisymmetry."""
    return l * m - k * n
