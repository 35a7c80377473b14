"""Matrices over the algebras, the twisted dagger, and the projections P_N."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .hopf import ad_R_invariance_check, spin_indices
from .podles import PodlesElement, embed, pstar, ptheta_inverse, unembed
from .scalar import Scalar, qint
from .suq2 import AlgebraElement, grade_component, multiply, star, v_basis


@dataclass(frozen=True)
class AlgebraMatrix:
    """Square or rectangular matrix of algebra elements with rho° spin blocks."""

    entries: Tuple[Tuple[object, ...], ...]
    spins: Tuple[Fraction, ...] = field(default=())

    @staticmethod
    def build(rows: Sequence[Sequence[object]], spins=()) -> "AlgebraMatrix":
        return AlgebraMatrix(tuple(tuple(r) for r in rows), tuple(Fraction(s) for s in spins))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    def weights(self) -> List[Fraction]:
        """Index labels m: rho°(K) acts on basis vector m by q^-m."""
        out: List[Fraction] = []
        for l in self.spins:
            out.extend(spin_indices(l))
        return out

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "AlgebraMatrix") -> "AlgebraMatrix":
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ValueError("shape mismatch")
        zero = type(self.entries[0][0])()
        rows = [[sum((self.entries[i][t] * other.entries[t][j] for t in range(m)), zero)
                 for j in range(p)] for i in range(n)]
        return AlgebraMatrix.build(rows, self.spins)

    def map(self, fn) -> "AlgebraMatrix":
        return AlgebraMatrix.build([[fn(e) for e in row] for row in self.entries], self.spins)

    def __add__(self, other: "AlgebraMatrix") -> "AlgebraMatrix":
        return AlgebraMatrix.build(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.spins)

    def __sub__(self, other: "AlgebraMatrix") -> "AlgebraMatrix":
        return self + other.map(lambda e: -e)

    def scale(self, c) -> "AlgebraMatrix":
        return self.map(lambda e: e.scale(c))

    def to_json(self) -> dict:
        return {"spin": [str(s) for s in self.spins],
                "entries": [[str(e) for e in row] for row in self.entries]}


def identity(spins=(0,), kind=PodlesElement) -> AlgebraMatrix:
    n = sum(int(2 * Fraction(l)) + 1 for l in spins)
    return AlgebraMatrix.build([[kind.scalar(1 if i == j else 0) for j in range(n)]
                                for i in range(n)], spins)


def row_vector_t(N: int) -> List[AlgebraElement]:
    """Row (t^l_{n,-l}, ..., t^l_{n,l}) with l = |N|/2, n = N/2."""
    l = Fraction(abs(N), 2)
    n = Fraction(N, 2)
    norm = Scalar.sqrt(qint(2 * l + 1)).inverse() * Scalar.q(-n)
    return [v_basis(l, n, k).scale(norm) for k in spin_indices(l)]


@lru_cache(maxsize=None)
def projection_P(N: int) -> AlgebraMatrix:
    """P_N = rho°(K^-1) t* t rho°(K) with t = row_vector_t(N)."""
    row = row_vector_t(N)
    idx = spin_indices(Fraction(abs(N), 2))
    rows = []
    for i, mi in enumerate(idx):
        ti = star(row[i])
        cur = []
        for j, mj in enumerate(idx):
            entry = multiply(ti, row[j]).scale(Scalar.q(mi - mj))
            if grade_component(entry, 0) != entry:
                raise ArithmeticError("projection entry outside M_0")
            cur.append(unembed(entry))
        rows.append(cur)
    return AlgebraMatrix.build(rows, (Fraction(abs(N), 2),))


def dagger(X: AlgebraMatrix) -> AlgebraMatrix:
    """Entrywise theta^-1 followed by the conjugate transpose."""
    n, m = X.shape
    if isinstance(X.entries[0][0], PodlesElement):
        conj = lambda e: pstar(ptheta_inverse(e))
    else:
        from .suq2 import theta_inverse
        conj = lambda e: star(theta_inverse(e))
    rows = [[conj(X.entries[j][i]) for j in range(n)] for i in range(m)]
    return AlgebraMatrix.build(rows, X.spins)


def direct_sum(X: AlgebraMatrix, Y: AlgebraMatrix) -> AlgebraMatrix:
    n1, m1 = X.shape
    n2, m2 = Y.shape
    zero = type(X.entries[0][0])()
    rows = [list(r) + [zero] * m2 for r in X.entries]
    rows += [[zero] * m1 + list(r) for r in Y.entries]
    return AlgebraMatrix.build(rows, X.spins + Y.spins)


def verify_projection(N: int) -> Dict[str, bool]:
    P = projection_P(N)
    entries_in_m0 = all(
        grade_component(embed(e), 0) == embed(e) for row in P.entries for e in row)
    return {
        "idempotent": (P @ P) == P,
        "self_dagger": dagger(P) == P,
        "entries_in_M0": entries_in_m0,
        "ad_R_invariant": ad_R_invariance_check(P),
    }
