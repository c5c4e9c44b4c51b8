"""Run the full cross-check battery over a genus range and report per check.

Usage: python3 scripts/run_verification.py --max-genus 6
Exit status is nonzero if any check fails at any genus.
"""

import argparse

from su2rep.cli import DEFAULT_GENUS_CAP, run_verification


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-genus", type=int, default=2)
    parser.add_argument("--max-genus", type=int, default=6)
    parser.add_argument(
        "--unsafe-genus-cap",
        type=int,
        default=DEFAULT_GENUS_CAP,
        help="lift the default runtime guard on Groebner-bound checks",
    )
    args = parser.parse_args(argv)
    if args.min_genus < 2 or args.max_genus < args.min_genus:
        parser.error("need 2 <= min-genus <= max-genus")

    failed = False
    for g in range(args.min_genus, args.max_genus + 1):
        report = run_verification(g, args.unsafe_genus_cap)
        print(f"genus {g}: {report.overall}")
        for check in report.checks:
            print(f"  [{check.status:>7}] {check.name}: {check.details}")
        if report.overall != "pass":
            failed = True
        print()
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
