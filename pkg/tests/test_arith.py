from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from outfn_euler.arith import (
    bernoulli, double_factorial_odd, half_integer_gamma_ratio, rational_str,
)


def akiyama_tanigawa(n):
    """Independent Bernoulli oracle; yields B_1 = +1/2, so flip that one."""
    row = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
    return -row[0] if n == 1 else row[0]


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(3) == 0


def test_bernoulli_matches_independent_algorithm():
    for n in range(0, 41):
        assert bernoulli(n) == akiyama_tanigawa(n)


def test_bernoulli_recurrence_to_200():
    for n in range(1, 201):
        assert sum(comb(n + 1, k) * bernoulli(k) for k in range(n + 1)) == 0
    assert all(bernoulli(n) == 0 for n in range(3, 201, 2))


def test_double_factorial():
    assert [double_factorial_odd(k) for k in (0, 2, 4)] == [1, 3, 105]
    for ell in range(101):
        assert double_factorial_odd(ell) * factorial(ell) * 2**ell == factorial(2 * ell)


def test_half_integer_gamma_examples():
    assert half_integer_gamma_ratio(1, 0) == Fraction(1, 2)
    assert half_integer_gamma_ratio(2, 0) == Fraction(3, 4)
    assert half_integer_gamma_ratio(3, 1) == Fraction(3, 4)
    assert half_integer_gamma_ratio(0, 0) == 1
    with pytest.raises(ValueError):
        half_integer_gamma_ratio(1, 2)


@given(st.integers(0, 60), st.integers(-20, 60))
def test_half_integer_gamma_functional_equation(n, k):
    if n - k < 0:
        return
    left = half_integer_gamma_ratio(n, k) * (n - k + Fraction(1, 2))
    assert left == half_integer_gamma_ratio(n + 1, k)


def test_rational_str():
    assert rational_str(Fraction(-161, 5760)) == "-161/5760"
    assert rational_str(Fraction(3)) == "3/1"
