"""Run every verification suite and print one line per check."""
import sys

from qpodles import checks


def main():
    failed = 0
    for name, suite in checks.SUITES.items():
        for c in suite():
            failed += not c.passed
            print(f"[{'PASS' if c.passed else 'FAIL'}] {name}: {c.name}  ({c.lhs} vs {c.rhs})")
    print(f"{failed} failing checks")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
