"""Laplace coefficients as formal series, scale changes, and the high-precision growth diagnostics."""
from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import comb

import mpmath

from .arith import as_rational, bernoulli, factorial, half_integer_gamma_ratio
from .series import BiSeries, Series, series_exp, wick_extract

__all__ = [
    "HighFloat",
    "PrecisionError",
    "default_precision",
    "laplace_coefficients",
    "scale_change_rows",
    "solve_scale_change",
    "stirling_coefficients",
    "shifted_weight_identity",
    "laplace_vs_graphs",
    "lgamma",
    "lgamma_checkpoint",
    "lgamma_ulp_error",
    "remainder_enclosure",
    "theorem_b_remainder",
    "theorem_a_ratio",
    "theorem_a_csv",
    "theorem_b_csv",
    "MAX_PRECISION",
]

HighFloat = mpmath.mpf
MAX_PRECISION = 4096


class PrecisionError(ArithmeticError):
    """Interval bounds stayed too wide even at the largest allowed precision."""


def default_precision() -> int:
    value = os.environ.get("OUTFN_PRECISION")
    bits = int(value) if value else 256
    if bits < 128:
        raise ValueError("precision must be at least 128 bits")
    return bits


def _coefficients(spec, length: int) -> list[Fraction]:
    if callable(spec):
        return [as_rational(spec(s)) for s in range(length)]
    values = list(spec.coefficients) if isinstance(spec, Series) else [as_rational(c) for c in spec]
    return values[:length]


@lru_cache(maxsize=16)
def _polar_exp(weights: tuple, order: int) -> BiSeries:
    """exp(h(x)/z) in the order window, h given by its coefficients from x^3 on."""
    terms = {(-1, s): c for s, c in enumerate(weights) if s >= 3 and c}
    return BiSeries(terms, order).exp()


def laplace_coefficients(f_series, g_plus_half_square, order: int) -> list[Fraction]:
    """c_0..c_order of sum_l z^l (2l-1)!! [x^(2l)] f(x) exp(h(x)/z), h = g + x^2/2.

    Both inputs are x-series: lists, Series, or callables s -> coefficient of x^s.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    h = _coefficients(g_plus_half_square, 2 * order + 3)
    if any(h[:3]):
        raise ValueError("h must start at x^3")
    h += [Fraction(0)] * (2 * order + 3 - len(h))
    f = _coefficients(f_series, 6 * order + 1)
    table = _polar_exp(tuple(h), order)
    return list(wick_extract(table, 1, order, x_factor=f))


def _shifted_exponential(shift: Fraction, length: int) -> list[Fraction]:
    return [shift**s / factorial(s) for s in range(length)]


def scale_change_rows(max_n: int) -> list[list[Fraction]]:
    """Rows c_{m,k}, k = 0..max_n: weight exp(-(e^x - x^2/2 - x - 1)/z + x(1/2 - m)), shifted by z^m."""
    h = tuple([Fraction(0)] * 3 + [Fraction(-1, factorial(s)) for s in range(3, 2 * max_n + 3)])
    table = _polar_exp(h, max_n)
    rows = []
    for m in range(max_n + 1):
        depth = max_n - m
        f = _shifted_exponential(Fraction(1, 2) - m, 6 * depth + 1)
        values = wick_extract(table, 1, depth, x_factor=f)
        rows.append([Fraction(0)] * m + list(values))
    return rows


def solve_scale_change(c, c_matrix) -> list[Fraction]:
    """Solve c_k = sum_{m<=k} c'_m c_{m,k} by forward substitution."""
    c = [as_rational(v) for v in c]
    out = []
    for k, target in enumerate(c):
        diag = as_rational(c_matrix[k][k])
        if diag == 0:
            raise ZeroDivisionError(f"c_{{{k},{k}}} vanishes")
        acc = target - sum((out[m] * c_matrix[m][k] for m in range(k)), Fraction(0))
        out.append(acc / diag)
    return out


def stirling_coefficients(order: int) -> Series:
    """Coefficients of exp(sum_k B_{k+1}/(k(k+1)) z^k)."""
    inner = [Fraction(0)] + [bernoulli(k + 1) / (k * (k + 1)) for k in range(1, order + 1)]
    return series_exp(Series(inner, order))


def shifted_weight_identity(m, order: int) -> tuple[Series, Series]:
    """Both sides of the closed form for the Laplace weight exp(-(e^x - x^2/2 - x - 1)/z + x(1/2 - m)).

    The right side is exp(sum_k z^k/(k(k+1)) ((m + k/2)(m - 1/2)^k + B_{k+1}/(1 - z(m - 1/2))^k)).
    """
    m = as_rational(m)
    h = [Fraction(0)] * 3 + [Fraction(-1, factorial(s)) for s in range(3, 2 * order + 3)]
    left = Series(laplace_coefficients(_shifted_exponential(Fraction(1, 2) - m, 6 * order + 1), h, order))
    shift = m - Fraction(1, 2)
    inner = [Fraction(0)] * (order + 1)
    for k in range(1, order + 1):
        scale = Fraction(1, k * (k + 1))
        inner[k] += scale * (m + Fraction(k, 2)) * shift**k
        b = bernoulli(k + 1)
        if b:
            for j in range(order + 1 - k):
                inner[k + j] += scale * b * comb(k + j - 1, j) * shift**j
    return left, series_exp(Series(inner, order))


def laplace_vs_graphs(weights, k_max: int) -> dict:
    """Compare Laplace coefficients with the graph sums of vertex weights b_s."""
    from .graphs import vertex_weight_sum

    if callable(weights):
        weight = lambda s: as_rational(weights(s))
    else:
        weight = lambda s: as_rational(weights.get(s, 0))
    h = [Fraction(0)] * 3 + [weight(s) / factorial(s) for s in range(3, 2 * k_max + 3)]
    series_side = laplace_coefficients([1], h, k_max)
    report = {"k_max": k_max, "ok": True, "first_mismatch": None, "values": []}
    for k in range(k_max + 1):
        graph_side = vertex_weight_sum(k, weight)
        report["values"].append([k, str(series_side[k]), str(graph_side)])
        if graph_side != series_side[k] and report["ok"]:
            report["ok"] = False
            report["first_mismatch"] = k
    return report


def lgamma(x, precision: int | None = None):
    with mpmath.workprec(precision or default_precision()):
        return mpmath.loggamma(mpmath.mpf(x))


def lgamma_checkpoint(n: int, k: int, precision: int | None = None):
    """Relative error of exp(lgamma(n + 1/2 - k)) against the exact half-integer value."""
    bits = precision or default_precision()
    with mpmath.workprec(bits + 32):
        exact = mpmath.mpf(1) * half_integer_gamma_ratio(n, k).numerator / half_integer_gamma_ratio(n, k).denominator
        exact *= mpmath.sqrt(mpmath.pi)
        approx = mpmath.exp(lgamma(mpmath.mpf(n - k) + mpmath.mpf(1) / 2, bits))
        return abs(approx / exact - 1)


def lgamma_ulp_error(n: int, k: int, precision: int | None = None):
    """Error of lgamma(n + 1/2 - k) in units of the last place at the given precision."""
    bits = precision or default_precision()
    value = lgamma(mpmath.mpf(n - k) + mpmath.mpf(1) / 2, bits)
    with mpmath.workprec(bits + 64):
        ratio = half_integer_gamma_ratio(n, k)
        exact = mpmath.log(mpmath.mpf(ratio.numerator) / ratio.denominator) + mpmath.log(mpmath.pi) / 2
        _, exponent = mpmath.frexp(exact)
        return abs(value - exact) / mpmath.ldexp(1, exponent - bits)


def _iv_rational(iv, q: Fraction):
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def _width_ok(x) -> bool:
    """The enclosure excludes zero and pins down at least 64 bits."""
    lo, hi = mpmath.mpf(x.a), mpmath.mpf(x.b)
    if lo <= 0 <= hi:
        return False
    return hi - lo <= min(abs(lo), abs(hi)) * mpmath.mpf(2) ** -64


def remainder_enclosure(n: int, R: int, precision: int | None = None, Ch=None):
    """Certified enclosure of |sqrt(2pi) e^-n n^n - sum_{k<R} Ch_k (-1)^k Gamma(n+1/2-k)| / Gamma(n+1/2-R).

    Everything is divided by sqrt(pi) first, so the Gamma values become
    exact rationals. Returns (interval, bits used).
    """
    if not n > R >= 1:
        raise ValueError("need n > R >= 1")
    if Ch is None:
        from .chi import chi_table

        Ch = chi_table(max(R, 1)).Ch
    partial = sum((Ch[k] * (-1) ** k * half_integer_gamma_ratio(n, k) for k in range(R)), Fraction(0))
    scale = half_integer_gamma_ratio(n, R)
    bits = precision or default_precision()
    iv = mpmath.iv
    while True:
        saved = iv.prec
        iv.prec = bits
        try:
            lead = iv.sqrt(2) * iv.exp(-n) * iv.mpf(n**n)
            ratio = abs(lead - _iv_rational(iv, partial)) / _iv_rational(iv, scale)
            ok = _width_ok(lead - _iv_rational(iv, partial))
        finally:
            iv.prec = saved
        if ok:
            return ratio, bits
        if bits * 2 > MAX_PRECISION:
            raise PrecisionError(f"n={n}, R={R}: cancellation not resolved at {bits} bits")
        bits *= 2


def theorem_b_remainder(n: int, R: int, precision: int | None = None, Ch=None):
    ratio, bits = remainder_enclosure(n, R, precision, Ch)
    with mpmath.workprec(bits):
        return (mpmath.mpf(ratio.a) + mpmath.mpf(ratio.b)) / 2


def theorem_a_ratio(n_list, precision: int | None = None, ch=None) -> list:
    """r_n = ch_{n-1} / (-Gamma(n - 3/2) / (sqrt(2 pi) log^2 n)).

    Gamma(n - 3/2)/sqrt(pi) is the exact rational half_integer_gamma_ratio(n - 2, 0).
    """
    if any(n < 2 for n in n_list):
        raise ValueError("growth ratios need n >= 2")
    if ch is None:
        from .chi import chi_table

        ch = chi_table(max(n_list) - 1).ch
    out = []
    with mpmath.workprec(precision or default_precision()):
        for n in n_list:
            value = ch[n - 1]
            gamma_part = half_integer_gamma_ratio(n - 2, 0)
            r = -mpmath.mpf(value.numerator) / value.denominator
            r *= mpmath.sqrt(2) * mpmath.log(n) ** 2
            r /= mpmath.mpf(gamma_part.numerator) / gamma_part.denominator
            out.append(r)
    return out


def _fmt(x, digits: int = 30) -> str:
    return mpmath.nstr(x, digits, min_fixed=-20, max_fixed=20)


def theorem_a_csv(n_list, values, header: str = "") -> str:
    lines = [header] if header else []
    lines.append("n,r_n")
    lines += [f"{n},{_fmt(v)}" for n, v in zip(n_list, values)]
    return "\n".join(lines) + "\n"


def theorem_b_csv(rows, header: str = "") -> str:
    lines = [header] if header else []
    lines.append("n,R,remainder_ratio")
    lines += [f"{n},{R},{_fmt(v)}" for n, R, v in rows]
    return "\n".join(lines) + "\n"
