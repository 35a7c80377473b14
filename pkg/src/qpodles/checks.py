"""Verification suites shared by the command line and the test-suite."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, List

from . import cyclic, ktheory, spectral
from .hopf import act_left
from .scalar import Scalar, qint
from .suq2 import haar, monomial, theta


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {"name": self.name, "status": "pass" if self.passed else "fail",
                "lhs": self.lhs, "rhs": self.rhs}


def equal_check(name: str, lhs, rhs) -> Check:
    return Check(name, lhs == rhs, str(lhs), str(rhs))


def expected_pairing(cocycle: str, N: int) -> Scalar:
    return {"epsilon": Scalar.q(N), "haar": Scalar.q(-N),
            "tau": Scalar(2) * qint(N), "phi": qint(N)}[cocycle]


def projection_suite(Ns=range(-3, 4)) -> List[Check]:
    out = []
    for N in Ns:
        for prop, ok in ktheory.verify_projection(N).items():
            out.append(Check(f"P_{N} {prop}", ok, str(ok), "True"))
    return out


def cocycle_suite(max_degree: int = 4, Ns=range(-3, 4)) -> List[Check]:
    out = []
    for c in (cyclic.TAU, cyclic.PHI):
        for label, defects in (("twisted cyclic", cyclic.cyclicity_defects),
                               ("closed", cyclic.closedness_defects)):
            bad = defects(c, max_degree)
            out.append(Check(f"{c.name} {label} (degree <= {max_degree})", not bad,
                             f"{len(bad)} failing tensors", "0 failing tensors"))
    for name in ("epsilon", "haar", "tau", "phi"):
        for N in Ns:
            out.append(equal_check(f"<{name}, P_{N}>", cyclic.pairing(name, N),
                                   expected_pairing(name, N)))
    return out


def orientation_suite() -> List[Check]:
    upper, lower = spectral.pi_D(cyclic.eta())
    return [
        equal_check("pi_D(eta) on M_-1", upper, cyclic.PodlesElement.scalar(Scalar.q(-1))),
        equal_check("pi_D(eta) on M_1", lower, cyclic.PodlesElement.scalar(-Scalar.q(1))),
        equal_check("integral of pi_wedge(eta)", cyclic.integral(cyclic.pi_wedge(cyclic.eta())),
                    Scalar(2)),
        equal_check("b(beta) identity", cyclic.beta_identity_check(), True),
    ]


def low_degree_monomials(max_degree: int = 3):
    out = []
    for d in range(max_degree + 1):
        for j in range(d + 1):
            for k in range(d - j + 1):
                i = d - j - k
                out.extend({(i, j, k), (-i, j, k)})
    return sorted(out)


def haar_suite(max_degree: int = 3) -> List[Check]:
    """Modular property and invariance of h on all monomials of low degree."""
    monos = [monomial(m) for m in low_degree_monomials(max_degree)]
    modular_bad = sum(1 for x, y in itertools.product(monos, repeat=2)
                      if haar(x * y) != haar(theta(y) * x))
    counits = {"E": 0, "F": 0, "K": 1, "K^-1": 1}
    invariance_bad = sum(1 for x in monos for g, e in counits.items()
                         if haar(act_left(g, x)) != Scalar(e) * haar(x))
    n = len(monos)
    return [Check(f"h(xy) = h(theta(y)x) on {n * n} pairs", modular_bad == 0,
                  f"{modular_bad} failing pairs", "0 failing pairs"),
            Check(f"h(g |> x) = eps(g)h(x) on {4 * n} pairs", invariance_bad == 0,
                  f"{invariance_bad} failing pairs", "0 failing pairs")]


def real_structure_suite(L="7/2", q0="1/2", tol: float = 1e-9) -> List[Check]:
    report = spectral.real_structure_check(L, q0, tol=tol)
    return [Check(name, r["pass"], f"{r['residual']:.3e}", f"<= {tol:g}")
            for name, r in report.items()]


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "projections": projection_suite,
    "cocycles": cocycle_suite,
    "orientation": orientation_suite,
    "haar": haar_suite,
    "real-structure": real_structure_suite,
}
