"""Truncated power series over the rationals.

Series is univariate in z.  BiSeries lives in z and x and may carry
negative powers of z, provided every z^-j comes with at least x^(3j).
A BiSeries of order N keeps the monomials z^a x^b of weight 2a + b <= 2N;
under the pole rule that window holds every term that can reach
z^0..z^N after the Gaussian pairing done by wick_extract.
"""
from __future__ import annotations

import json
from fractions import Fraction

from ._backend import bigcd, bigint
from .arith import as_rational, double_factorial_odd, factorial

__all__ = [
    "Series",
    "BiSeries",
    "WindowError",
    "series_mul",
    "series_exp",
    "series_log",
    "exp_coefficients",
    "log_coefficients",
    "series_compose_scaled_exponent",
    "wick_extract",
    "x_series",
]


class WindowError(ValueError):
    """A requested coefficient lies outside what the truncation window keeps exactly."""


def _scaled(values):
    """Integers over a common denominator: values[i] == out[i] / den."""
    den = 1
    for v in values:
        d = v.denominator
        den = den // bigcd(den, d) * d if den % d else den
    den = bigint(den)
    return [bigint(v.numerator) * (den // v.denominator) for v in values], den


def _unscale(nums, den):
    out = []
    for x in nums:
        g = bigcd(x, den)
        out.append(Fraction(int(x // g), int(den // g)))
    return out


def exp_coefficients(a) -> list[Fraction]:
    """Coefficients of exp(sum a_k z^k); a[0] must be zero.

    Uses E_n = (1/n) sum_k k a_k E_{n-k} on integers over one shared,
    lazily enlarged denominator.
    """
    if a[0] != 0:
        raise ValueError("exp needs a zero constant term")
    nums, den_in = _scaled([as_rational(c) for c in a])
    weighted = [k * nums[k] for k in range(len(nums))]
    e = [bigint(1)]
    den = bigint(1)
    for n in range(1, len(nums)):
        acc = bigint(0)
        for k in range(1, n + 1):
            if weighted[k]:
                acc += weighted[k] * e[n - k]
        step = n * den_in
        g = bigcd(acc, step) if acc else step
        q = step // g
        if q != 1:
            den *= q
            e = [v * q for v in e]
        e.append(acc // g)
    return _unscale(e, den)


def log_coefficients(b) -> list[Fraction]:
    """Coefficients of log(sum b_k z^k); b[0] must be one."""
    if b[0] != 1:
        raise ValueError("log needs constant term 1")
    nums, den_in = _scaled([as_rational(c) for c in b])
    logs = [bigint(0)]
    den = bigint(1)
    for n in range(1, len(nums)):
        acc = bigint(0)
        for k in range(1, n):
            if logs[k]:
                acc += k * logs[k] * nums[n - k]
        top = n * den * nums[n] - acc
        step = n * den_in
        g = bigcd(top, step) if top else step
        q = step // g
        if q != 1:
            den *= q
            logs = [v * q for v in logs]
        logs.append(top // g)
    return _unscale(logs, den)


class Series:
    """Power series in z known through z^order."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients, order: int | None = None):
        coeffs = [as_rational(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.coefficients = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([1], order)

    @classmethod
    def monomial(cls, power: int, coefficient, order: int) -> Series:
        coeffs = [0] * (order + 1)
        if power <= order:
            coeffs[power] = coefficient
        return cls(coeffs, order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"z^{n} not known at order {self.order}")
        return self.coefficients[n]

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coefficients[: order + 1], order)

    def _check(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series([other], self.order)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Series([a + b for a, b in zip(self, other)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return Series([-a for a in self], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([a * other for a in self], self.order)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        terms = [f"({c})*z^{n}" for n, c in enumerate(self) if c]
        return f"Series({' + '.join(terms) or '0'}; order={self.order})"

    def exp(self) -> Series:
        return series_exp(self)

    def log(self) -> Series:
        return series_log(self)

    def to_rows(self):
        return [(n, c.numerator, c.denominator) for n, c in enumerate(self)]

    def to_json(self) -> str:
        rows = [{"n": n, "numerator": str(p), "denominator": str(q)} for n, p, q in self.to_rows()]
        return json.dumps({"order": self.order, "coefficients": rows}, indent=1)

    @classmethod
    def from_json(cls, text: str) -> Series:
        data = json.loads(text)
        coeffs = [Fraction(int(r["numerator"]), int(r["denominator"])) for r in data["coefficients"]]
        return cls(coeffs, data["order"])

    def to_csv(self) -> str:
        lines = ["n,numerator,denominator"]
        lines += [f"{n},{p},{q}" for n, p, q in self.to_rows()]
        return "\n".join(lines) + "\n"


def series_mul(a: Series, b: Series) -> Series:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(n + 1 - i):
                y = b.coefficients[j]
                if y:
                    out[i + j] += x * y
    return Series(out, n)


def series_exp(a: Series) -> Series:
    if a[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    return Series(exp_coefficients(a.coefficients), a.order)


def series_log(a: Series) -> Series:
    if a[0] != 1:
        raise ValueError("series_log needs constant term 1")
    return Series(log_coefficients(a.coefficients), a.order)


def x_series(coefficients) -> list[Fraction]:
    """Normalize an x-series given as a list, a Series, or a callable k -> coefficient."""
    if isinstance(coefficients, Series):
        return list(coefficients.coefficients)
    return [as_rational(c) for c in coefficients]


class BiSeries:
    """Series in z and x; z^a x^b kept when b >= -3a and 2a + b <= 2*order."""

    __slots__ = ("terms", "order")

    def __init__(self, terms, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.order = order
        kept = {}
        for (a, b), c in dict(terms).items():
            if b < 0 or b < -3 * a:
                raise ValueError(f"z^{a} x^{b} breaks the pole rule")
            c = as_rational(c)
            if c and 2 * a + b <= 2 * order:
                kept[(a, b)] = c
        self.terms = kept

    @property
    def z_min(self) -> int:
        return -2 * self.order

    @property
    def z_max(self) -> int:
        return self.order

    @property
    def x_max(self) -> int:
        return 6 * self.order

    def coefficient(self, z_degree: int, x_degree: int) -> Fraction:
        if 2 * z_degree + x_degree > 2 * self.order:
            raise WindowError(f"z^{z_degree} x^{x_degree} is outside the order-{self.order} window")
        return self.terms.get((z_degree, x_degree), Fraction(0))

    def x_rows(self) -> dict[int, dict[int, Fraction]]:
        rows: dict[int, dict[int, Fraction]] = {}
        for (a, b), c in self.terms.items():
            rows.setdefault(b, {})[a] = c
        return rows

    def truncate(self, order: int) -> BiSeries:
        if order > self.order:
            raise WindowError("cannot widen a truncated window")
        return BiSeries(self.terms, order)

    def __eq__(self, other):
        if isinstance(other, BiSeries):
            return self.order == other.order and self.terms == other.terms
        return NotImplemented

    def __repr__(self):
        return f"BiSeries({len(self.terms)} terms; order={self.order})"

    def _same(self, other):
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: BiSeries) -> BiSeries:
        self._same(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BiSeries(out, self.order)

    def __neg__(self):
        return BiSeries({k: -c for k, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> BiSeries:
        factor = as_rational(factor)
        return BiSeries({k: c * factor for k, c in self.terms.items()}, self.order)

    def __mul__(self, other: BiSeries) -> BiSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._same(other)
        cap = 2 * self.order
        by_weight: dict[int, list] = {}
        for (a, b), c in other.terms.items():
            by_weight.setdefault(2 * a + b, []).append((a, b, c))
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            room = cap - 2 * a1 - b1
            for w, bucket in by_weight.items():
                if w > room:
                    continue
                for a2, b2, c2 in bucket:
                    key = (a1 + a2, b1 + b2)
                    out[key] = out.get(key, 0) + c1 * c2
        return BiSeries(out, self.order)

    def exp(self) -> BiSeries:
        """exp of a series with zero constant term, via b E_b = sum_k k F_k E_{b-k} in x."""
        if self.terms.get((0, 0)):
            raise ValueError("exp needs a zero constant term")
        n = self.order
        rows = self.x_rows()
        base = [Fraction(0)] * (n + 1)
        for a, c in rows.get(0, {}).items():
            base[a] = c
        e_rows = [{a: c for a, c in enumerate(exp_coefficients(base)) if c}]
        factors = {k: list(r.items()) for k, r in rows.items() if k > 0}
        for b in range(1, 6 * n + 1):
            top = (2 * n - b) // 2
            acc: dict[int, Fraction] = {}
            for k, f_row in factors.items():
                if k > b:
                    continue
                prev = e_rows[b - k]
                for a1, c1 in f_row:
                    ck = k * c1
                    for a2, c2 in prev.items():
                        a = a1 + a2
                        if a <= top:
                            acc[a] = acc.get(a, 0) + ck * c2
            e_rows.append({a: c / b for a, c in acc.items() if c})
        terms = {(a, b): c for b, r in enumerate(e_rows) for a, c in r.items()}
        return BiSeries(terms, n)


def series_compose_scaled_exponent(t: Series, order: int | None = None) -> BiSeries:
    """(e^x - x^2/2 - x - 1)/z + x/2 + sum_n t_n z^n e^(-n x) in the order-N window."""
    if t[0] != 0:
        raise ValueError("t must have zero constant term")
    n_max = t.order if order is None else order
    if n_max > t.order:
        raise WindowError(f"t is only known through z^{t.order}")
    terms: dict[tuple[int, int], Fraction] = {}
    for s in range(3, 2 * n_max + 3):
        terms[(-1, s)] = Fraction(1, factorial(s))
    if n_max >= 1:
        terms[(0, 1)] = Fraction(1, 2)
    for n in range(1, n_max + 1):
        tn = t[n]
        if not tn:
            continue
        for s in range(0, 2 * (n_max - n) + 1):
            terms[(n, s)] = terms.get((n, s), 0) + tn * Fraction((-n) ** s, factorial(s))
    return BiSeries(terms, n_max)


def wick_extract(b: BiSeries, sign: int, order: int | None = None, x_factor=None) -> Series:
    """sum_l (sign z)^l (2l-1)!! [x^(2l)] b, through z^order.

    With x_factor = f(x) the product f(x) * b is used without being formed.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = b.order if order is None else order
    if n > b.order:
        raise WindowError(f"order {n} requested from a window of order {b.order}")
    f = x_series(x_factor) if x_factor is not None else [Fraction(1)]
    terms = b.terms
    out = []
    for k in range(n + 1):
        total = Fraction(0)
        for ell in range(0, 3 * k + 1):
            a = k - ell
            inner = Fraction(0)
            for i in range(min(len(f) - 1, 2 * ell) + 1):
                fi = f[i]
                if fi:
                    c = terms.get((a, 2 * ell - i))
                    if c:
                        inner += fi * c
            if inner:
                total += sign**ell * double_factorial_odd(ell) * inner
        out.append(total)
    return Series(out, n)
