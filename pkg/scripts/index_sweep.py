"""Index and q-index of P_N dF P_N over a range of N and q.

    python3 scripts/index_sweep.py --N -2 -1 0 1 2 --q 1/2 1/3 --out index.csv
"""
import argparse
import csv
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from qpodles.scalar import eval_numeric, qint
from qpodles.spectral import index_report


@dataclass(frozen=True)
class SweepConfig:
    Ns: Sequence[int] = (-2, -1, 0, 1, 2)
    q0s: Sequence[Fraction] = (Fraction(1, 2),)
    extra_spin: Fraction = Fraction(5)     # L = |N|/2 + extra_spin
    tol: float = 1e-8


def sweep(cfg: SweepConfig):
    for q0 in cfg.q0s:
        for N in cfg.Ns:
            L = Fraction(abs(N), 2) + cfg.extra_spin
            start = time.perf_counter()
            r = index_report(N, L, q0, cfg.tol)
            yield {"N": N, "q0": str(q0), "L": str(L), "ind": r.ind, "qind": r.qind,
                   "expected_qind": eval_numeric(qint(N), q0),
                   "margin": r.margin, "seconds": round(time.perf_counter() - start, 2)}


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--N", type=int, nargs="+", default=list(SweepConfig.Ns))
    p.add_argument("--q", type=Fraction, nargs="+", default=list(SweepConfig.q0s))
    p.add_argument("--extra-spin", type=Fraction, default=SweepConfig.extra_spin)
    p.add_argument("--out", help="CSV file (default: stdout)")
    args = p.parse_args(argv)
    cfg = SweepConfig(tuple(args.N), tuple(args.q), args.extra_spin)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    writer = None
    for row in sweep(cfg):
        if writer is None:
            writer = csv.DictWriter(out, fieldnames=list(row))
            writer.writeheader()
        writer.writerow(row)
        out.flush()


if __name__ == "__main__":
    main()
