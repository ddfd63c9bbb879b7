"""Exact integer and rational helpers: factorials, Bernoulli numbers, half-integer Gamma values."""
from __future__ import annotations

from fractions import Fraction
from math import comb

__all__ = [
    "Rational",
    "TABLE_CAP",
    "set_table_cap",
    "factorial",
    "bernoulli",
    "double_factorial_odd",
    "half_integer_gamma_ratio",
    "as_rational",
    "rational_str",
]

Rational = Fraction

TABLE_CAP = 2100

_factorials = [1]
_double_factorials = [1]
_bernoulli = [Fraction(1)]


def set_table_cap(cap: int) -> None:
    """Change how many entries the memo tables may hold."""
    global TABLE_CAP
    if cap < 1:
        raise ValueError("table cap must be positive")
    TABLE_CAP = cap


def _grow(table, n, step):
    while len(table) <= n:
        table.append(step(len(table), table))


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    if n >= TABLE_CAP:
        out = _factorials[-1]
        for k in range(len(_factorials), n + 1):
            out *= k
        return out
    _grow(_factorials, n, lambda k, t: t[-1] * k)
    return _factorials[n]


def double_factorial_odd(ell: int) -> int:
    """(2*ell - 1)!!, with the empty product for ell = 0."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    if ell >= TABLE_CAP:
        out = _double_factorials[-1]
        for k in range(len(_double_factorials), ell + 1):
            out *= 2 * k - 1
        return out
    _grow(_double_factorials, ell, lambda k, t: t[-1] * (2 * k - 1))
    return _double_factorials[ell]


def _next_bernoulli(n, table):
    # sum_{k=0}^{n} C(n+1, k) B_k = 0 solved for B_n
    acc = sum(comb(n + 1, k) * table[k] for k in range(n) if table[k])
    return -acc / (n + 1)


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= 3 and n % 2:
        return Fraction(0)
    if n >= TABLE_CAP:
        table = list(_bernoulli)
        _grow(table, n, _next_bernoulli)
        return table[n]
    _grow(_bernoulli, n, _next_bernoulli)
    return _bernoulli[n]


def half_integer_gamma_ratio(n: int, k: int) -> Fraction:
    """Gamma(n - k + 1/2) / sqrt(pi) as an exact rational."""
    m = n - k
    if m < 0:
        raise ValueError(f"need n - k >= 0, got n={n}, k={k}")
    return Fraction(factorial(2 * m), 4**m * factorial(m))


def as_rational(value) -> Fraction:
    """Accept ints, Fractions, or 'p/q' strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def rational_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"
