"""Exhaustive extremality sweep over p-group products of order p^m.

For every (p, row, n, m) inside the hypotheses, lists the partitions whose
multiplier reaches the maximal order and flags any sweep where the maximum is
not attained uniquely by (1, ..., 1).

    python scripts/extremality_sweep.py --primes 2 3 5 7 --max-m 7 --max-class 3
"""

import argparse
import itertools
import time

from baermult.engine import HypothesisError
from baermult.verify import classify_extremal


def rows_up_to(max_class: int, max_len: int):
    for s in range(1, max_len + 1):
        yield from itertools.product(range(1, max_class + 1), repeat=s)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7])
    ap.add_argument("--max-m", type=int, default=7)
    ap.add_argument("--max-class", type=int, default=3)
    ap.add_argument("--max-len", type=int, default=2, help="longest class row")
    ap.add_argument("--max-n", type=int, default=3, help="largest nilpotent product class")
    args = ap.parse_args()

    start = time.perf_counter()
    sweeps = refused = 0
    failing = []
    for p, row, n in itertools.product(args.primes, rows_up_to(args.max_class, args.max_len), range(1, args.max_n + 1)):
        for m in range(1, args.max_m + 1):
            try:
                rep = classify_extremal(p, m, row, n)
            except HypothesisError:
                refused += 1
                continue
            sweeps += 1
            if not rep.unique_elementary_maximizer:
                failing.append((p, row, n, m, rep.maximizers, rep.target_exponent))

    print(f"{sweeps} sweeps, {refused} outside hypotheses, {time.perf_counter() - start:.1f}s")
    print(f"{len(failing)} sweeps without a unique elementary maximizer")
    for p, row, n, m, maxi, target in failing:
        print(f"  p={p} row={row} n={n} m={m}: maximizers {maxi} at p^{target}")


if __name__ == "__main__":
    main()
