"""Falsification sweep for mixed-class products of cyclic p-groups.

For each nonincreasing class sequence and every partition of m, compares the
multiplier order of Z_{p^a1} *n_1* ... *n_{t-1}* Z_{p^at} against the order
for m copies of Z_p, and reports any non-elementary group that reaches it.

    python scripts/multiproduct_sweep.py --primes 5 7 --max-m 6
"""

import argparse
import itertools

from baermult.engine import Verdict, is_extremal
from baermult.groups import GroupSpec
from baermult.verify import partitions


def class_sequences(length: int, top: int):
    for seq in itertools.combinations_with_replacement(range(top, 0, -1), length):
        if len(set(seq)) > 1:
            yield seq


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[5, 7])
    ap.add_argument("--max-m", type=int, default=6)
    ap.add_argument("--max-class", type=int, default=3)
    ap.add_argument("--rows", default="3;3,1;4", help="semicolon separated class rows")
    args = ap.parse_args()
    rows = [tuple(int(c) for c in r.split(",")) for r in args.rows.split(";")]

    counts = {v: 0 for v in Verdict}
    bad = []
    for p, row in itertools.product(args.primes, rows):
        for m in range(2, args.max_m + 1):
            for part in partitions(m):
                if len(part) < 3:
                    continue
                for classes in class_sequences(len(part) - 1, min(args.max_class, row[0])):
                    g = GroupSpec.product(0, tuple(p**a for a in part), classes)
                    v = is_extremal(g, row)
                    counts[v.verdict] += 1
                    if v.verdict is not Verdict.HYPOTHESES_VIOLATED and not v.consistent:
                        bad.append((p, row, str(g), v.actual_exponent, v.target_exponent))

    print(", ".join(f"{k.value} {n}" for k, n in counts.items()))
    print(f"{len(bad)} inconsistent verdicts")
    for item in bad:
        print("  ", item)


if __name__ == "__main__":
    main()
