"""Exact Dirac eigenvalues next to a numeric diagonalization of the truncation."""
import argparse
from fractions import Fraction

import numpy as np

from qpodles.scalar import eval_numeric
from qpodles.spectral import SpinorModel, dirac_spectrum


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--L", type=Fraction, default=Fraction(11, 2))
    p.add_argument("--q", type=Fraction, default=Fraction(1, 2))
    args = p.parse_args(argv)

    spec = dirac_spectrum(args.L)
    numeric = np.sort(np.linalg.eigvalsh(SpinorModel.build(args.L, args.q).dirac()))
    exact = np.sort([eval_numeric(v, args.q) for v, m in spec for _ in range(m)])
    print(f"{'eigenvalue':<44} {'at q=' + str(args.q):>16} {'mult':>5}")
    for value, mult in spec:
        print(f"{str(value):<44} {eval_numeric(value, args.q):>16.10g} {mult:>5}")
    print(f"max |numeric - exact| = {np.max(np.abs(numeric - exact)):.2e} "
          f"over {len(exact)} eigenvalues")


if __name__ == "__main__":
    main()
