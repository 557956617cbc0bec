"""Where does i * chi_{c+1}(i) < chi_{c+1}(i+1) first break?

Prints the smallest violating i for each class c together with both sides,
plus the equality check on all partitions of n <= --max-n.

    python scripts/inequality_table.py --max-c 6
"""

import argparse

from baermult.verify import equality_records, find_inequality_counterexample


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-c", type=int, default=6)
    ap.add_argument("--bound", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()

    print(f"{'c':>3} {'i':>5} {'i*chi(i)':>14} {'chi(i+1)':>14}")
    for c in range(1, args.max_c + 1):
        hit = find_inequality_counterexample(c, args.bound)
        if hit is None:
            print(f"{c:>3}  none up to {args.bound}")
        else:
            i, lhs, rhs = hit
            print(f"{c:>3} {i:>5} {lhs:>14} {rhs:>14}")

    recs = equality_records(args.max_n, args.max_c)
    wrong = [r for r in recs if not r.passed]
    print(f"\nequality holds iff elementary: {len(recs) - len(wrong)}/{len(recs)} partitions agree")
    for r in wrong:
        print("  ", r.input, r.lhs)


if __name__ == "__main__":
    main()
