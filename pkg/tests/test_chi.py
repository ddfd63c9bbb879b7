from fractions import Fraction

import pytest

from outfn_euler.chi import (
    ChiTable, chi_implicit, chi_lambert, chi_laplace_lie, chi_table, lambert_mu, log_from_exp, reduced_v,
    route_consistency,
)
from outfn_euler.series import Series, series_exp, series_log

CH = [Fraction(-1, 24), Fraction(-1, 48), Fraction(-161, 5760), Fraction(-367, 5760),
      Fraction(-120257, 580608)]
CH_HAT = [Fraction(-1, 24), Fraction(-23, 1152), Fraction(-11237, 414720), Fraction(-2482411, 39813120),
          Fraction(-272785979, 1337720832)]


def branch_point_oracle(order):
    """Coefficients of W(z) = -1 + sum m_k p^k with p = sqrt(2(1 + e z)), by series reversion.

    With W = -1 + t one has p^2 = 2 sum_{k>=2} (k-1) t^k / k!, so t = p / sqrt(g(t))
    where g(t) = 2 sum_{k>=0} (k+1) t^k / (k+2)!.
    """
    from math import factorial

    g = [Fraction(2 * (k + 1), factorial(k + 2)) for k in range(order + 1)]

    def compose(outer, inner):
        # outer(inner(p)) with inner(0) = 0
        result = [Fraction(0)] * (order + 1)
        power = [Fraction(1)] + [Fraction(0)] * order
        for c in outer:
            for i in range(order + 1):
                result[i] += c * power[i]
            power = [sum(power[j] * inner[i - j] for j in range(i + 1)) for i in range(order + 1)]
        return result

    t = [Fraction(0), Fraction(1)] + [Fraction(0)] * (order - 1)
    for _ in range(order + 1):
        inv_sqrt = series_exp(series_log(Series(compose(g, t))) * Fraction(-1, 2))
        t = [Fraction(0)] + list(inv_sqrt)[:order]
    return [Fraction(-1) + t[0]] + t[1:]


def test_lambert_mu_matches_reversion():
    nums, den, _ = lambert_mu(15)
    mu = [Fraction(int(v), int(den)) for v in nums]
    oracle = branch_point_oracle(15)
    assert mu[1:] == oracle
    assert mu[1:7] == [-1, 1, Fraction(-1, 3), Fraction(11, 72), Fraction(-43, 540), Fraction(769, 17280)]


@pytest.mark.parametrize("build", [chi_lambert, chi_implicit, chi_laplace_lie])
def test_first_values(build):
    table = build(5)
    assert list(table.ch[1:]) == CH
    assert list(table.Ch[1:]) == CH_HAT
    assert table.Ch[0] == 1


def test_ch_is_log_of_ch_hat():
    table = chi_lambert(12)
    assert Series(table.ch) == series_log(Series(table.Ch))
    assert log_from_exp(table.Ch) == table.ch


def test_routes_agree_to_20():
    report = route_consistency(20, graph_depth=2)
    assert report.ok, report.detail
    assert report.graph_checked == 2


@pytest.mark.slow
def test_routes_agree_to_50():
    assert route_consistency(50, graph_depth=0).ok


def test_signs_to_200():
    table = chi_table(200)
    assert all(c < 0 for c in table.ch[1:])
    assert all(c < 0 for c in table.Ch[1:])
    assert reduced_v(table).positive()


def test_reduced_v_values():
    w = reduced_v(chi_lambert(5)).w
    assert w[1] == Fraction(1, 24)
    assert w[2] == Fraction(23, 3456)


def test_reduced_v_detects_mismatch():
    table = chi_lambert(4)
    broken = ChiTable(table.ch, table.Ch[:3] + (table.Ch[3] * 2,) + table.Ch[4:], "broken")
    with pytest.raises(ArithmeticError):
        reduced_v(broken, mu_source=table)


def test_table_slicing_and_formats():
    long = chi_table(30)
    short = chi_table(5)
    assert short.ch == long.ch[:6]
    lines = short.to_csv("# head").splitlines()
    assert lines[0] == "# head"
    assert lines[1] == "n,ch_numerator,ch_denominator,Ch_numerator,Ch_denominator,sign"
    assert lines[4].split(",")[:3] == ["3", "-161", "5760"]
    assert '"ch": "-1/24"' in short.to_json()


def test_unknown_route():
    with pytest.raises(ValueError):
        chi_table(3, "bogus")
