"""Euler characteristics ch_n = chi(Out(F_{n+1})) and the coefficients of exp(sum ch_n z^n).

Three independent routes:

* lambert: the branch-point recursion for the Lambert W coefficients mu_n,
  run on integers over one shared, lazily enlarged denominator;
* implicit: invert the triangular system relating the Stirling-type rows
  c_{m,k} to the trivial series 1;
* laplace_lie: Laplace coefficients of the Lie-graph vertex weights.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from ._backend import bigcd, bigint
from .arith import double_factorial_odd, factorial, rational_str
from .series import _unscale, log_coefficients

__all__ = [
    "ChiTable",
    "ReducedV",
    "RouteReport",
    "ROUTES",
    "chi_lambert",
    "chi_implicit",
    "chi_laplace_lie",
    "chi_table",
    "reduced_v",
    "route_consistency",
    "lambert_mu",
    "log_from_exp",
]

ROUTES = ("lambert", "implicit", "laplace_lie")


@dataclass(frozen=True)
class ChiTable:
    """ch[n] for n >= 1 (ch[0] is a zero placeholder) and Ch[n] for n >= 0."""

    ch: tuple
    Ch: tuple
    route: str
    _mu_raw: tuple = field(default=(), repr=False, compare=False)
    _alpha_raw: tuple = field(default=(), repr=False, compare=False)

    @property
    def max_n(self) -> int:
        return len(self.ch) - 1

    @property
    def mu(self) -> tuple:
        """mu[k + 1] is mu_k, starting at mu_{-1}."""
        if not self._mu_raw:
            return ()
        nums, den = self._mu_raw
        return tuple(_unscale(nums, den))

    @property
    def alpha(self) -> tuple:
        return tuple(Fraction(int(a), int(d)) for a, d in self._alpha_raw)

    def rows(self):
        for n in range(1, self.max_n + 1):
            c, big = self.ch[n], self.Ch[n]
            yield n, c, big, (c > 0) - (c < 0)

    def to_csv(self, header: str = "") -> str:
        lines = [header] if header else []
        lines.append("n,ch_numerator,ch_denominator,Ch_numerator,Ch_denominator,sign")
        for n, c, big, sign in self.rows():
            lines.append(f"{n},{c.numerator},{c.denominator},{big.numerator},{big.denominator},{sign}")
        return "\n".join(lines) + "\n"

    def to_json(self, header: str = "") -> str:
        data = {
            "header": header,
            "route": self.route,
            "max_n": self.max_n,
            "rows": [
                {"n": n, "ch": rational_str(c), "Ch": rational_str(big), "sign": sign}
                for n, c, big, sign in self.rows()
            ],
        }
        return json.dumps(data, indent=1) + "\n"


def log_from_exp(Ch) -> tuple:
    """ch from Ch via ch_n = Ch_n - (1/n) sum_k k ch_k Ch_{n-k}."""
    return tuple(log_coefficients(list(Ch)))


def lambert_mu(count: int):
    """mu_{-1}..mu_count scaled to a common denominator, plus the alpha values.

    Returns (nums, den, alphas) with mu_k = nums[k + 1] / den and
    alphas[n] = (a, d) meaning alpha_n = a / d.
    """
    den = bigint(1)
    nums = [bigint(0), bigint(-1), bigint(1)]
    alphas = [(bigint(2), bigint(1)), (bigint(-1), bigint(1))]
    live = {0: bigint(2), 1: bigint(-1)}  # alpha_n * den**2
    for n in range(2, count + 1):
        # alpha_n = sum_{k=2}^{n-1} mu_k mu_{n+1-k}, folded on its symmetry
        pair = bigint(0)
        k = 2
        while k < n + 1 - k:
            pair += nums[k + 1] * nums[n + 2 - k]
            k += 1
        pair *= 2
        if k == n + 1 - k and k <= n - 1:
            pair += nums[k + 1] ** 2
        live[n] = pair
        alphas.append((pair, den * den))
        top = (2 * den * (n - 1) * nums[n - 1] + (n - 1) * live[n - 2]
               - 2 * (n + 1) * pair - 4 * den * nums[n])
        step = 4 * (n + 1) * den
        g = bigcd(top, step) if top else step
        q = step // g
        if q != 1:
            den *= q
            nums = [v * q for v in nums]
            live[n] *= q * q
            live[n - 1] *= q * q
        nums.append(top // g)
        del live[n - 2]
    return nums, den, alphas


def chi_lambert(max_n: int) -> ChiTable:
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    nums, den, alphas = lambert_mu(2 * max_n + 1)
    # Ch_n = -(2n-1)!! ((2n-1)/2 mu_{2n-1} - (2n+1) mu_{2n+1}), over the denominator 2*den
    scaled = [2 * den]
    dfact = bigint(1)
    for n in range(1, max_n + 1):
        dfact *= 2 * n - 1
        scaled.append(-dfact * ((2 * n - 1) * nums[2 * n] - 2 * (2 * n + 1) * nums[2 * n + 2]))
    Ch = tuple(_unscale(scaled, 2 * den))
    return ChiTable(log_from_exp(Ch), Ch, "lambert", (tuple(nums), den), tuple(alphas))


def _polar_weights_lie(s: int) -> Fraction:
    return Fraction(-1, s * (s - 1)) if s >= 3 else Fraction(0)


def _polar_weights_exp(s: int) -> Fraction:
    return Fraction(-1, factorial(s)) if s >= 3 else Fraction(0)


def chi_implicit(max_n: int) -> ChiTable:
    from .asymptotics import scale_change_rows, solve_scale_change

    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    rows = scale_change_rows(max_n)
    target = [Fraction(1)] + [Fraction(0)] * max_n
    solved = solve_scale_change(target, rows)
    Ch = tuple((-1) ** m * c for m, c in enumerate(solved))
    return ChiTable(log_from_exp(Ch), Ch, "implicit")


def chi_laplace_lie(max_n: int) -> ChiTable:
    from .asymptotics import laplace_coefficients

    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    Ch = tuple(laplace_coefficients([1], _polar_weights_lie, max_n))
    return ChiTable(log_from_exp(Ch), Ch, "laplace_lie")


_BUILDERS = {"lambert": chi_lambert, "implicit": chi_implicit, "laplace_lie": chi_laplace_lie}
_cache: dict[str, ChiTable] = {}


def chi_table(max_n: int, route: str = "lambert") -> ChiTable:
    """Memoized table; a longer cached table is sliced rather than recomputed."""
    route = route.replace("-", "_")
    if route not in _BUILDERS:
        raise ValueError(f"unknown route {route!r}")
    held = _cache.get(route)
    if held is None or held.max_n < max_n:
        held = _cache[route] = _BUILDERS[route](max_n)
    if held.max_n == max_n:
        return held
    return ChiTable(held.ch[: max_n + 1], held.Ch[: max_n + 1], route)


@dataclass(frozen=True)
class ReducedV:
    """w[k] = v_{2k-1} / 2^((2k-1)/2), for k = 0..max_n."""

    w: tuple

    def positive(self) -> bool:
        return all(x > 0 for x in self.w[1:])


def reduced_v(table: ChiTable, mu_source: ChiTable | None = None) -> ReducedV:
    """Two readings of w_k: from the mu coefficients and from Ch; they must agree.

    If the table carries no mu values (routes other than lambert), the mu
    values come from mu_source or a fresh lambert run.
    """
    mu = table.mu
    if not mu:
        mu = (mu_source or chi_lambert(table.max_n)).mu
    from_mu = []
    from_ch = []
    for k in range(table.max_n + 1):
        from_mu.append(Fraction(2 * k - 1, 2) * mu[2 * k] - (2 * k + 1) * mu[2 * k + 2])
        from_ch.append(-table.Ch[k] / (double_factorial_odd(k)))
    for k, (a, b) in enumerate(zip(from_mu, from_ch)):
        if a != b:
            raise ArithmeticError(f"w_{k}: mu reading {a} differs from Ch reading {b}")
    return ReducedV(tuple(from_mu))


@dataclass
class RouteReport:
    max_n: int
    ok: bool
    first_divergence: tuple | None = None
    graph_checked: int = 0
    detail: list = field(default_factory=list)

    def as_dict(self):
        return {
            "max_n": self.max_n,
            "ok": self.ok,
            "first_divergence": list(self.first_divergence) if self.first_divergence else None,
            "graph_checked": self.graph_checked,
            "detail": self.detail,
        }


def route_consistency(max_n: int, graph_depth: int = 3) -> RouteReport:
    """Compare all three routes, and the tau graph sums for n <= graph_depth."""
    tables = {r: _BUILDERS[r](max_n) for r in ROUTES}
    report = RouteReport(max_n, True)
    base = tables["lambert"]
    for n in range(0, max_n + 1):
        for route in ROUTES[1:]:
            other = tables[route]
            if other.Ch[n] != base.Ch[n] or other.ch[n] != base.ch[n]:
                report.ok = False
                report.first_divergence = ("lambert", route, n)
                report.detail.append(
                    f"n={n}: lambert Ch={base.Ch[n]} ch={base.ch[n]}, "
                    f"{route} Ch={other.Ch[n]} ch={other.ch[n]}")
                return report
    if graph_depth:
        from .graphs import TAU, character_sum

        for n in range(1, min(graph_depth, max_n) + 1):
            value = character_sum(n, 0, TAU, connected=True)
            report.graph_checked = n
            if value != base.ch[n]:
                report.ok = False
                report.first_divergence = ("lambert", "graphs", n)
                report.detail.append(f"n={n}: graph sum {value} vs ch {base.ch[n]}")
                return report
    return report
