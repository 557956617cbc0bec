"""Acceptance gate: one test per criterion, each printing a single pass/fail line.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines appear even
when output capture is on.
"""

import itertools
import time

import pytest

from baermult.engine import (
    multiplier_abelian_nilpotent,
    multiplier_abelian_polynilpotent,
    multiplier_multiproduct_polynilpotent,
    multiplier_product_c_nilpotent,
    multiplier_product_polynilpotent,
)
from baermult.exponents import d_exponent, witt
from baermult.groups import GroupSpec, PPowerOrder, Theorem
from baermult.hall import ResourceLimitError, hall_basis, nested_hall_count
from baermult.verify import check_bounds, classify_extremal, find_inequality_counterexample


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail

    return emit


def divisor_chains(moduli, max_len):
    """Nonincreasing chains over ``moduli`` with each entry dividing the previous one."""
    moduli = sorted(set(moduli), reverse=True)
    out = []
    frontier = [(r,) for r in moduli]
    while frontier:
        out.extend(frontier)
        frontier = [c + (r,) for c in frontier if len(c) < max_len for r in moduli if r <= c[-1] and c[-1] % r == 0]
    return out


def test_criterion_1_witt_oracle(report):
    start = time.perf_counter()
    bad = [(n, w) for n in range(6) for w in range(1, 7) if len(hall_basis(n, w)) != witt(w, n)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1.0
    report(1, ok, f"|hall_basis(n,w)| == witt(w,n) on 30 cases, mismatches {bad}, {elapsed:.2f}s (limit 1s)")


def test_criterion_2_schur_special_case(report):
    bad = []
    for p, m in itertools.product((2, 3, 5), range(1, 7)):
        rep = multiplier_abelian_nilpotent(GroupSpec.p_group(p, (1,) * m), 1)
        if rep.theorem is not Theorem.T2_7 or rep.order != PPowerOrder(p, m * (m - 1) // 2):
            bad.append((p, m, str(rep.order)))
    report(2, not bad, f"|M(Z_p^(m))| == p^(m(m-1)/2) for p in 2,3,5 and m <= 6, mismatches {bad}")


def test_criterion_3_direct_sum_extremality(report):
    start = time.perf_counter()
    bad = []
    for p, row, m in itertools.product((2, 3), [(1,), (2,), (1, 1)], range(1, 8)):
        rep = classify_extremal(p, m, row)
        if not rep.unique_elementary_maximizer:
            bad.append((p, row, m, rep.maximizers, rep.target_exponent))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10.0
    detail = f"order p^beta_m attained only at (1,...,1), 42 sweeps, {elapsed:.2f}s (limit 10s)"
    if bad:
        detail += f", failing (p, row, m, maximizers, beta_m): {bad}"
    report(3, ok, detail)


def test_criterion_4_product_extremality(report):
    start = time.perf_counter()
    bad = []
    for m in range(1, 7):
        rep = classify_extremal(5, m, (2,), 2)
        if not rep.unique_elementary_maximizer or rep.target_exponent != d_exponent((2,), 2, m):
            bad.append((m, rep.maximizers))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10.0
    report(4, ok, f"p=5 n=2 row (2): order 5^d_m attained only at (1,...,1) for m <= 6, failing {bad}, {elapsed:.2f}s")


def test_criterion_5_inequality_counterexample(report):
    hit = find_inequality_counterexample(1, 100)
    report(5, hit == (3, 9, 6), f"smallest i with i*chi_2(i) >= chi_2(i+1) is {hit}, expected (3, 9, 6)")


def test_criterion_6_nested_hall_oracle(report):
    checked, skipped, bad = 0, [], []
    for row in [(2,), (2, 1), (3,)]:
        for n in range(1, min(row[0], 2) + 1):
            for i in range(0, 5):
                try:
                    got = nested_hall_count(row, n, i)
                except ResourceLimitError:
                    skipped.append((row, n, i))
                    continue
                checked += 1
                if got != d_exponent(row, n, i):
                    bad.append((row, n, i, got))
    report(6, not bad and checked > 0, f"nested_hall_count == d_exponent on {checked} cases, skipped {skipped}, mismatches {bad}")


def test_criterion_7_theorem_boundaries(report):
    bad = []
    # (a) n = c: both readings of the n/c comparison
    sweep_a = 0
    for c in (1, 2, 3):
        for free in range(0, 6):
            chains = [()] + divisor_chains((7, 11, 49, 77), 5 - free)
            for chain in chains:
                if free + len(chain) == 0 or free + len(chain) > 5:
                    continue
                g = GroupSpec.product(free, chain, c)
                a = multiplier_product_c_nilpotent(g, c, case=Theorem.T2_15i).structure
                b = multiplier_product_c_nilpotent(g, c, case=Theorem.T2_15ii).structure
                sweep_a += 1
                if a != b:
                    bad.append(("n=c", str(g), c, str(a), str(b)))
    # (b) equal classes in the multiple product
    sweep_b = 0
    rows = [(1,), (2,), (3,), (1, 1), (2, 1), (2, 2)]
    for n in (1, 2):
        for k in range(1, 4):
            for free in range(0, k + 2):
                chains = [()] + divisor_chains((3, 5, 9, 15, 45), k + 1 - free)
                for chain in chains:
                    if free + len(chain) != k + 1:
                        continue
                    g = GroupSpec.product(free, chain, n)
                    for row in rows:
                        if row[0] < n:
                            continue
                        x = multiplier_multiproduct_polynilpotent(g, row).structure
                        y = multiplier_product_polynilpotent(g, row).structure
                        sweep_b += 1
                        if x != y:
                            bad.append(("equal classes", str(g), row, str(x), str(y)))
    # (c) class-one products are direct sums
    sweep_c = 0
    rows = [r for s in (1, 2) for r in itertools.product(range(1, 4), repeat=s)]
    for chain in divisor_chains(range(2, 17), 3):
        g = GroupSpec.abelian(0, chain)
        for row in rows:
            x = multiplier_product_polynilpotent(g, row).structure
            y = multiplier_abelian_polynilpotent(g, row).structure
            sweep_c += 1
            if x != y:
                bad.append(("n=1", str(g), row, str(x), str(y)))
    report(7, not bad, f"boundary agreement on {sweep_a} + {sweep_b} + {sweep_c} instances, mismatches {bad[:5]}")


def test_criterion_8_bound_suites(report):
    failures = []
    total = 0
    for p, row in itertools.product((2, 3), [(1,), (2,), (1, 1)]):
        recs = check_bounds(p, 7, row)
        total += len(recs)
        failures.extend((r.check, p, r.input["row"], r.input["partition"], r.lhs, r.rhs) for r in recs if not r.passed)
    kinds = sorted({f[0] for f in failures})
    detail = f"{total} bound records over the criterion 3 sweep, {len(failures)} failing"
    if failures:
        detail += f" in {kinds}: {failures}"
    report(8, not failures, detail)
