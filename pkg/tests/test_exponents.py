import pytest
from hypothesis import given
from hypothesis import strategies as st

from baermult.exponents import (
    ClassRow,
    beta,
    d_exponent,
    e_exponent,
    f_exponent,
    g_exponent,
    h_value,
    mobius,
    nested_tail,
    u_value,
    witt,
)
from baermult.hall import hall_basis

rows = st.lists(st.integers(1, 3), min_size=1, max_size=3).map(ClassRow)


def brute_mobius(d):
    primes = []
    k, q = d, 2
    while q * q <= k:
        while k % q == 0:
            primes.append(q)
            k //= q
        q += 1
    if k > 1:
        primes.append(k)
    if len(primes) != len(set(primes)):
        return 0
    return (-1) ** len(primes)


@pytest.mark.parametrize("d, expected", [(1, 1), (4, 0), (6, 1), (2, -1), (30, -1), (12, 0)])
def test_mobius_examples(d, expected):
    assert mobius(d) == expected


def test_mobius_matches_trial_division():
    assert all(mobius(d) == brute_mobius(d) for d in range(1, 500))


def test_mobius_rejects_zero():
    with pytest.raises(ValueError):
        mobius(0)


# -- witt ------------------------------------------------------------------------


@given(st.integers(0, 50))
def test_witt_weight_one_counts_letters(n):
    assert witt(1, n) == n


@given(st.integers(0, 200))
def test_witt_weight_two(n):
    assert witt(2, n) == n * (n - 1) // 2


@given(st.integers(2, 40))
def test_witt_single_letter_vanishes(w):
    assert witt(w, 1) == 0


@given(st.integers(1, 30))
def test_witt_no_letters(w):
    assert witt(w, 0) == 0


def test_witt_against_hall_enumeration():
    # frozen from hall_basis: chi_3(2)=2, chi_4(2)=3, chi_3(3)=8, chi_3(4)=20
    assert witt(3, 2) == len(hall_basis(2, 3)) == 2
    assert witt(4, 2) == len(hall_basis(2, 4)) == 3
    assert witt(3, 3) == len(hall_basis(3, 3)) == 8
    assert witt(3, 4) == len(hall_basis(4, 3)) == 20


@given(st.integers(1, 12), st.integers(0, 30))
def test_witt_monotone_in_letters(w, n):
    assert witt(w, n + 1) >= witt(w, n)


def test_witt_is_exact_for_large_values():
    # chi_7(10) = (10^7 - 10) / 7
    assert witt(7, 10) == (10**7 - 10) // 7
    assert witt(30, 10) > 2**64


@pytest.mark.parametrize("w, n", [(0, 3), (-1, 2)])
def test_witt_rejects_bad_weight(w, n):
    with pytest.raises(ValueError):
        witt(w, n)


# -- nested compositions ------------------------------------------------------------


@pytest.mark.parametrize(
    "row, i, expected",
    [((1,), 3, 3), ((1, 1), 4, 15), ((1,), 1, 0), ((2, 3), 1, 0), ((3, 1, 2), 1, 0)],
)
def test_beta_examples(row, i, expected):
    assert beta(row, i) == expected


@given(st.integers(1, 5), st.integers(0, 12))
def test_beta_single_class(c, i):
    assert beta((c,), i) == witt(c + 1, i)


@pytest.mark.parametrize("tail, x, expected", [((), 7, 7), ((1,), 3, 3), ((2,), 2, 2)])
def test_nested_tail_examples(tail, x, expected):
    assert nested_tail(tail, x) == expected


@pytest.mark.parametrize(
    "row, n, i, expected",
    [((2,), 2, 2, 5), ((2,), 2, 1, 0), ((1,), 1, 4, 6)],
)
def test_d_exponent_examples(row, n, i, expected):
    assert d_exponent(row, n, i) == expected


def test_d_exponent_rejects_class_ordering():
    with pytest.raises(ValueError):
        d_exponent((1,), 2, 3)


@given(rows, st.integers(0, 8))
def test_d_with_class_one_is_beta(row, i):
    assert d_exponent(row, 1, i) == beta(row, i)


def test_f_and_g_examples():
    assert f_exponent(2, 2, 2) == 5
    assert g_exponent(1, 2, 3) == 8
    with pytest.raises(ValueError):
        f_exponent(1, 2, 3)
    with pytest.raises(ValueError):
        g_exponent(3, 2, 3)


@given(st.integers(1, 5), st.integers(0, 15))
def test_f_equals_g_on_the_boundary(c, x):
    assert f_exponent(c, c, x) == g_exponent(c, c, x)


@given(rows, st.integers(1, 3), st.integers(2, 9))
def test_difference_monotonicity_of_d(row, n, j):
    if row.head < n:
        return
    d = [d_exponent(row, n, i) for i in range(j + 1)]
    diffs = [d[i] - d[i - 1] for i in range(2, j + 1)]
    assert diffs == sorted(diffs)


# -- multiple products ------------------------------------------------------------


def test_h_example_instantiated():
    for c1 in (2, 3, 4):
        expected = witt(c1 + 1, 2) - witt(c1 + 1, 1) + witt(c1 + 2, 2) - witt(c1 + 2, 1)
        assert h_value((c1,), (2,), 1) == expected


def test_u_with_second_sum_empty():
    assert u_value((2,), (2,), 2) == witt(3, 2) + witt(4, 2) == 5
    assert u_value((3,), (2,), 2) == witt(4, 2) + witt(5, 2)


def test_u_degenerate_free_counts():
    assert u_value((2,), (2, 1), 0) == 0
    assert u_value((2,), (2, 1), 1) == 0


classes_st = st.lists(st.integers(1, 3), min_size=1, max_size=5).map(lambda xs: tuple(sorted(xs, reverse=True)))


@given(classes_st, st.integers(0, 2), st.data())
def test_u_is_sum_of_h(classes, extra, data):
    row = ClassRow((classes[0] + extra,))
    t = data.draw(st.integers(0, len(classes) + 1))
    assert u_value(row, classes, t) == sum(h_value(row, classes, j) for j in range(1, t))


@given(st.integers(1, 3), st.integers(1, 5), st.integers(0, 1), st.data())
def test_e_reproduces_d_for_equal_classes(n, k, tail, data):
    row = ClassRow((n + data.draw(st.integers(0, 1)),) + (1,) * tail)
    classes = (n,) * k
    t = data.draw(st.integers(0, k + 1))
    assert e_exponent(row, classes, t, 0) == d_exponent(row, n, t)
    for i in range(max(t, 1), k + 1):
        assert e_exponent(row, classes, t, i) == d_exponent(row, n, i + 1)


def test_multiple_product_argument_checks():
    with pytest.raises(ValueError):
        h_value((2,), (1, 2), 1)
    with pytest.raises(ValueError):
        u_value((1,), (2, 1), 2)
    with pytest.raises(IndexError):
        h_value((2,), (2, 1), 0)
    with pytest.raises(IndexError):
        e_exponent((2,), (2, 1), 2, 1)


def test_class_row_validation():
    assert ClassRow(3) == (3,)
    with pytest.raises(ValueError):
        ClassRow(())
    with pytest.raises(ValueError):
        ClassRow((2, 0))
