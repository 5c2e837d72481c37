from __future__ import annotations

import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import binomial_sum, fib
from rotabaxter.errors import DegenerateDenominator, InvalidFamilyParams
from rotabaxter.rbo import coeffs
from rotabaxter.rbo.coeffs import (R1Table, alpha_sum_formula, extend_row, fibonacci, r1_alpha_row,
                                   r1_extend)
from rotabaxter.rbo.families import r1_rule
from rotabaxter.rbo.verify import rb_check

F = Fraction


def test_first_row_examples():
    assert r1_alpha_row(0, F(-1, 2), F(-2, 3), 3)[3] == F(-3, 4)
    assert r1_alpha_row(0, 1, F(1, 2), 4)[4] == F(3, 5)
    assert r1_alpha_row(5, 5, 5, 6) == [5] * 7


def test_first_row_exclusions():
    with pytest.raises(InvalidFamilyParams, match="2q1 = q0\\+q2"):
        r1_alpha_row(0, 1, 2, 5)
    with pytest.raises(DegenerateDenominator) as info:
        extend_row([0, 1, 2], 5)
    assert info.value.index == 3
    with pytest.raises(InvalidFamilyParams):
        extend_row([1, 2], 4)


def test_degenerate_rows_fall_back_to_other_pairs():
    # q0 = q1 != q2: the (0, 1) pair reads 0 = 0 at m = 3, the others pin q3
    assert extend_row([3, 3, 1], 8) == [3, 3, 1, 3, 3, 2, 3, 3, F(7, 3)]
    assert extend_row([2, 1, 1], 5) == [2, 1, 1, 1, 1, 1]
    assert extend_row([2, 1, 2], 5) == [2, 1, 2, F(3, 2), 2, F(5, 3)]


def test_higher_rows():
    fib_row = r1_alpha_row(0, 1, F(1, 2), 8)
    assert r1_extend(fib_row, 0, 2, 3)[(2, 1)] == F(-1, 2)
    const = r1_extend([F(7)] * 10, 7, 3, 5)
    assert all(const[(2, m)] == -49 for m in range(6))
    tail = r1_extend(extend_row([3, 1, 1], 12), 3, 4, 6)
    for k in range(2, 5):
        for m in range(1, 7):
            assert tail[(k, m)] == -(-1) ** k
    with pytest.raises(ValueError):
        r1_extend(fib_row, 0, 5, 8)


def test_binomial_sum_small_cases():
    row = [F(v) for v in (2, 3, 5, 7, 11, 13, 17)]
    for m in range(5):
        assert alpha_sum_formula(row, 0, m) == row[m]
        assert alpha_sum_formula(row, 1, m) == row[0] * row[m] - row[0] * row[m + 1] - row[m] * row[m + 1]
    fib_row = r1_alpha_row(0, 1, F(1, 2), 12)
    table = r1_extend(fib_row, 0, 3, 6)
    assert all(alpha_sum_formula(fib_row, 2, m) == table[(3, m)] for m in range(7))


@settings(max_examples=40)
@given(st.lists(st.fractions(-8, 8, max_denominator=6), min_size=8, max_size=8),
       st.integers(0, 3), st.integers(0, 4))
def test_binomial_sum_matches_literal_tuples(row, k, m):
    assert alpha_sum_formula(row, k, m) == binomial_sum(row, k, m)


def test_fibonacci_numbers():
    assert fibonacci(7) == 13
    assert fibonacci(-3) == 2
    for i in range(-10, 11):
        assert fibonacci(i + 2) - fibonacci(i + 1) - fibonacci(i) == 0
        assert fibonacci(i) == fib(i)


PIPELINE_CASES = [
    (coeffs.lemma_const_coeff(5), [5, 5, 5]),
    (coeffs.lemma_const_coeff(F(-2, 3)), [F(-2, 3)] * 3),
    (coeffs.lemma_run_coeff(0, 1, 1), [0, 1, 0]),
    (coeffs.lemma_run_coeff(0, 1, 2), [0, 0, 1]),
    (coeffs.lemma_run_coeff(2, -1, 3), [2, 2, 2, -1]),
    (coeffs.lemma_aba_coeff(1, 2), [1, 2, 1]),
    (coeffs.lemma_aba_coeff(-3, F(1, 2)), [-3, F(1, 2), -3]),
    (coeffs.lemma_tail_coeff(3, 1), [3, 1, 1]),
    (coeffs.lemma_tail_coeff(0, 2), [0, 2, 2]),
    (coeffs.fibonacci_coeff(0, 1), [0, 1, F(1, 2)]),
    (coeffs.fibonacci_coeff(1, 4), [1, 4, F(5, 2)]),
]


@pytest.mark.parametrize("formula, prefix", PIPELINE_CASES)
def test_closed_forms_match_the_recurrence(formula, prefix):
    K, M = 6, 8
    row = extend_row(prefix, K + M)
    table = r1_extend(row, row[0], K, M)
    for (k, m), v in table.items():
        assert formula(k, m) == v, (k, m)


def test_uniform_tail_formula_is_not_an_rb_operator():
    uniform = r1_rule(coeffs.lemma_tail_coeff_uniform(3, 1), 0, {})
    corrected = r1_rule(coeffs.lemma_tail_coeff(3, 1), 0, {})
    assert rb_check(corrected, 1, 8).passed
    report = rb_check(uniform, 1, 4)
    assert not report.passed
    x = report.first_violation.inputs[0]
    assert (x, x) in report.failing_inputs()
    # the two agree except on the m = 0 column from k = 2 on
    assert coeffs.lemma_tail_coeff(3, 1)(2, 0) == 3
    assert coeffs.lemma_tail_coeff_uniform(3, 1)(2, 0) == -1


def test_fibonacci_first_row_formula():
    for a, b in ((0, 1), (1, 4)):
        row = r1_alpha_row(a, b, F(a + b, 2), 25)
        assert all(coeffs.fibonacci_row_value(a, b, m) == row[m] for m in range(26))


def test_table_grows_consistently_under_threads():
    prefix = [1, 2, 4]
    ref = r1_extend(extend_row(prefix, 24), 1, 12, 12)
    table = R1Table(prefix)
    errors = []

    def worker(offset):
        try:
            for d in range(offset, 24, 3):
                for k in range(1, min(d, 12) + 1):
                    m = d - k
                    if m <= 12 and table(k, m) != ref[(k, m)]:
                        errors.append((k, m))
        except Exception as exc:  # pragma: no cover - surfaced below
            errors.append(exc)

    threads = [threading.Thread(target=worker, args=(i % 3,)) for i in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    assert table.row(10) == extend_row(prefix, 10)
