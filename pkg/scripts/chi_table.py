"""Solve for the correction functional chi and show how stable it is in the degree bound."""
import argparse

from qpodles.cyclic import CHI_PINS, STATED_CHI, solve_chi
from qpodles.podles import PodlesElement


def show(pair):
    return " (x) ".join(PodlesElement.monomial_text(m) for m in pair)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--degree", type=int, default=4, help="largest total degree solved for")
    p.add_argument("--rows", type=int, default=25)
    args = p.parse_args(argv)

    low = solve_chi(args.degree, CHI_PINS)
    high = solve_chi(args.degree + 1, CHI_PINS)
    changed = [k for k, v in low.items() if high.get(k) != v]
    print(f"{len(low)} values at degree <= {args.degree}; "
          f"{len(changed)} change at degree <= {args.degree + 1}")
    print("seeded values:")
    for key, value in STATED_CHI.items():
        mark = "agrees" if low.get(key) == value else f"solved {low.get(key)}"
        print(f"  chi({show(key)}) = {value}  [{mark}]")
    print("nonzero solved values:")
    shown = 0
    for key, value in sorted(low.items()):
        if value.is_zero():
            continue
        print(f"  chi({show(key)}) = {value}")
        shown += 1
        if shown >= args.rows:
            break


if __name__ == "__main__":
    main()
