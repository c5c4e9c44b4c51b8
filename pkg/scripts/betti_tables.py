"""Print intersection Betti tables for a range of genera.

Usage: python3 scripts/betti_tables.py --max-genus 8
"""

import argparse

from su2rep.assembly import ih_series_structural, ip_series_closed


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-genus", type=int, default=2)
    parser.add_argument("--max-genus", type=int, default=8)
    parser.add_argument(
        "--cross-check",
        action="store_true",
        help="also compute each table through the structural route and compare",
    )
    args = parser.parse_args(argv)
    if args.min_genus < 2 or args.max_genus < args.min_genus:
        parser.error("need 2 <= min-genus <= max-genus")

    for g in range(args.min_genus, args.max_genus + 1):
        table = ip_series_closed(g)
        print(f"genus {g}  (degrees 0..{6 * g - 6})")
        print("  " + " ".join(str(c) for c in table.coefficients))
        print(f"  total dimension {sum(table.coefficients)}")
        if args.cross_check:
            other = ih_series_structural(g)
            status = "agree" if other.coefficients == table.coefficients else "DISAGREE"
            print(f"  structural route: {status}")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
