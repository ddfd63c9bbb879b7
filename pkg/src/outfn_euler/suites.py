"""Verification suites behind `outfn-euler verify`; each returns a list of check records."""
from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

import mpmath

from . import asymptotics as asym
from .arith import bernoulli
from .chi import chi_table, reduced_v, route_consistency
from .graphs import (
    SIGMA, TAU, UNIT, XI, Graph, antipode, antipode_star_id, automorphism_count_bruteforce,
    character_sum, convolution_check, convolve, core_subgraph_classes, enumerate_graphs,
    evaluate, id_star_antipode, labeled_counting_sides, leaf_labeled_character_sum, tau,
)
from .series import Series, series_compose_scaled_exponent, series_mul, wick_extract

__all__ = ["SUITES", "DEFAULT_DEPTH", "run_suite"]

DEFAULT_DEPTH = {"series": 10, "hopf": 3, "graphs": 3, "routes": 20, "asym": 1000}


def _check(name, ok, detail=None):
    record = {"name": name, "ok": bool(ok)}
    if detail is not None:
        record["detail"] = detail
    return record


def _num(x, digits=20):
    return mpmath.nstr(x, digits)


def suite_series(depth):
    checks = []
    rng = random.Random(20240917)
    bad = None
    for trial in range(500):
        coeffs = [0] + [rng.randint(-5, 5) for _ in range(8)]
        s = Series(coeffs, 8)
        if s.exp().log() != s:
            bad = coeffs
            break
    checks.append(_check("exp and log are inverse on 500 random series", bad is None, bad))
    bad = None
    for trial in range(50):
        a, b, c = (Series([rng.randint(-4, 4) for _ in range(7)], 6) for _ in range(3))
        if series_mul(a, b) != series_mul(b, a) or series_mul(series_mul(a, b), c) != series_mul(a, series_mul(b, c)):
            bad = trial
            break
    checks.append(_check("multiplication commutes and associates", bad is None, bad))
    order = max(depth, 1)
    T = Series(chi_table(order).ch, order)
    paired = wick_extract(series_compose_scaled_exponent(T).exp(), -1)
    checks.append(_check(f"Gaussian pairing of exp(T(z,x)) with sign -1 is 1 to order {order}",
                         paired == Series.one(order), [str(c) for c in paired][:6]))
    lap = asym.laplace_coefficients([1], lambda s: Fraction(-1, factorial(s)) if s >= 3 else 0, 20)
    checks.append(_check("Laplace coefficients of -(e^x-x-1) equal the Stirling series to order 20",
                         Series(lap) == asym.stirling_coefficients(20)))
    for m in ("0", "1/2", "1", "2"):
        left, right = asym.shifted_weight_identity(Fraction(m), 12)
        checks.append(_check(f"closed Bernoulli form of the shifted Stirling weight, m={m}, order 12",
                             left == right))
    return checks


def _core_graphs(depth):
    return [c for n in range(1, depth + 1) for c in enumerate_graphs(n, 0) if c.graph.is_core]


def suite_hopf(depth):
    checks = []
    first_bad = None
    total = 0
    for cls in _core_graphs(depth):
        g = cls.graph
        total += 1
        problems = []
        if convolve(TAU, SIGMA, g) != 0:
            problems.append("tau*sigma")
        if convolve(SIGMA, TAU, g) != 0:
            problems.append("sigma*tau")
        if id_star_antipode(g):
            problems.append("id*S")
        if antipode_star_id(g):
            problems.append("S*id")
        if evaluate(TAU, antipode(g)) != SIGMA(g):
            problems.append("tau(S) != sigma")
        if problems and first_bad is None:
            first_bad = {"graph": g.to_dict(), "failed": problems}
    checks.append(_check(f"convolution inverses and antipode on {total} core graphs up to loop order {depth}",
                         first_bad is None, first_bad))
    star = Graph.star(3)
    checks.append(_check("unit on an edge-free graph",
                         convolve(TAU, SIGMA, star) == 1 == UNIT(star) and convolution_check(star) == 1))
    first_bad = None
    count = 0
    for n in range(1, depth + 1):
        for cls in enumerate_graphs(n, 0):
            count += 1
            if convolution_check(cls.graph) != 0 and first_bad is None:
                first_bad = cls.graph.to_dict()
    checks.append(_check(f"alternating subgraph sum vanishes on {count} cyclic graphs", first_bad is None, first_bad))
    example = Graph.from_edges(4, [(0, 2), (0, 3), (1, 3), (1, 2), (2, 3), (2, 3)], [0, 0, 1, 1])
    classes = core_subgraph_classes(example)
    checks.append(_check("four-leg example has 7 core subgraph classes", len(classes) == 7,
                         sorted(classes.values())))
    left, right = labeled_counting_sides(min(depth, 2))
    mismatch = sorted(k for k in left if left[k] != right[k])
    checks.append(_check("cut-edge labeled counting identity", not mismatch, mismatch[:3] or None))
    return checks


def suite_graphs(depth):
    checks = []
    table = chi_table(max(depth, 1))
    rank_two = enumerate_graphs(1, 0)
    listing = [{"edges": [list(e) for e in c.graph.edge_ends], "aut": c.aut, "tau": str(tau(c.graph))}
               for c in rank_two]
    checks.append(_check("rank-2 classes", sorted(c.aut for c in rank_two) == [8, 8, 12], listing))
    for n in range(1, depth + 1):
        t = character_sum(n, 0, TAU)
        checks.append(_check(f"tau sum at loop order {n} equals ch_{n}", t == table.ch[n], str(t)))
        s = character_sum(n, 0, SIGMA)
        target = -bernoulli(n + 1) / (n * (n + 1))
        checks.append(_check(f"sigma sum at loop order {n} equals -B_{n + 1}/({n}*{n + 1})", s == target, str(s)))
        x = character_sum(n, 0, XI)
        checks.append(_check(f"xi sum at loop order {n} equals ch_{n}", x == table.ch[n], str(x)))
    for rank, leaves, expected in ((2, 0, Fraction(-1, 24)), (1, 1, Fraction(1, 2)), (0, 3, Fraction(1))):
        direct = leaf_labeled_character_sum(rank, leaves, TAU, "direct")
        orbit = leaf_labeled_character_sum(rank, leaves, TAU, "factorial")
        checks.append(_check(f"leaf-labeled tau sum, rank {rank}, {leaves} leaves",
                             direct == orbit == expected, [str(direct), str(orbit)]))
    sample = [c for n in range(1, min(depth, 3) + 1) for c in enumerate_graphs(n, 0)]
    sample += [c for s in range(1, 4) for c in enumerate_graphs(1, s)]
    sample = sample[::max(1, len(sample) // 50)][:50]
    bad = [c.graph.to_dict() for c in sample if automorphism_count_bruteforce(c.graph) != c.aut]
    checks.append(_check(f"|Aut| matches explicit counting on {len(sample)} graphs", not bad, bad[:1] or None))
    bad = None
    for n in range(1, depth + 1):
        for c in enumerate_graphs(n, 0):
            if not c.graph.is_core and tau(c.graph) != 0:
                bad = c.graph.to_dict()
    checks.append(_check("tau vanishes on graphs with a separating edge", bad is None, bad))
    k_max = min(depth, 3)
    for label, weights, top in (("-1", lambda s: -1, k_max), ("-(s-2)!", lambda s: -factorial(s - 2), min(k_max, 2)),
                                ("0", lambda s: 0, k_max)):
        report = asym.laplace_vs_graphs(weights, top)
        checks.append(_check(f"Laplace coefficients equal vertex-weight sums, b_s = {label}", report["ok"],
                             report["values"]))
    return checks


def suite_routes(depth):
    report = route_consistency(depth, graph_depth=min(3, depth))
    return [_check(f"three routes agree to n={depth}, graph sums to n={report.graph_checked}",
                   report.ok, report.as_dict())]


def suite_asym(depth):
    checks = []
    top = max(depth, 2)
    table = chi_table(top)
    bad = next((n for n in range(1, top + 1) if not (table.ch[n] < 0 and table.Ch[n] < 0)), None)
    checks.append(_check(f"ch_n < 0 and Ch_n < 0 for 1 <= n <= {top}", bad is None, bad))
    w = reduced_v(table)
    bad = next((k for k in range(1, top + 1) if w.w[k] <= 0), None)
    checks.append(_check(f"w_k > 0 for 1 <= k <= {top}", bad is None, bad))
    ratios = {}
    for R in (1, 2, 3, 4):
        for n in (50, 100, 200, 400):
            interval, bits = asym.remainder_enclosure(n, R, Ch=table.Ch if top >= R else None)
            ratios[(n, R)] = (asym.theorem_b_remainder(n, R), bits)
        ok = ratios[(400, R)][0] <= 2 * ratios[(100, R)][0] and all(
            ratios[(n, R)][0] > 0 for n in (50, 100, 200, 400))
        checks.append(_check(f"remainder ratio bounded for R={R}", ok,
                             [[n, _num(ratios[(n, R)][0]), ratios[(n, R)][1]] for n in (50, 100, 200, 400)]))
    ns = [n for n in (125, 250, 500, 1000) if n <= top + 1]
    if ns:
        values = asym.theorem_a_ratio(ns, ch=table.ch)
        shown = [[n, _num(v)] for n, v in zip(ns, values)]
        checks.append(_check("growth ratios r_n are positive", all(v > 0 for v in values), shown))
        if len(ns) >= 2:
            checks.append(_check(f"|r_{ns[-1]} - 1| < |r_{ns[0]} - 1|",
                                 abs(values[-1] - 1) < abs(values[0] - 1), shown))
        checks.append(_check(f"r_{ns[-1]} lies in [0.5, 1.5]", 0.5 <= values[-1] <= 1.5, shown[-1]))
    rng = random.Random(7)
    bits = asym.default_precision()
    # exp multiplies the rounding error of a p-bit logarithm by its size, so the
    # exponentiated comparison is drawn where |lgamma| stays below 2^8
    worst = mpmath.mpf(0)
    for _ in range(20):
        n = rng.randint(1, 60)
        k = rng.randint(0, n)
        worst = max(worst, asym.lgamma_checkpoint(n, k, bits))
    checks.append(_check("exp(lgamma) at half-integers within 2^(8-p)", worst <= mpmath.mpf(2) ** (-bits + 8),
                         _num(worst, 5)))
    worst = max(asym.lgamma_ulp_error(n, k, bits) for n, k in
                [(rng.randint(1, top), 0) for _ in range(20)] + [(top, rng.randint(0, top)) for _ in range(5)])
    checks.append(_check("lgamma at half-integers within 4 ulp", worst <= 4, _num(worst, 5)))
    return checks


SUITES = {
    "series": suite_series,
    "hopf": suite_hopf,
    "graphs": suite_graphs,
    "routes": suite_routes,
    "asym": suite_asym,
}


def run_suite(name: str, depth: int | None = None) -> dict:
    names = list(SUITES) if name == "all" else [name]
    results = {}
    for suite in names:
        d = depth if depth is not None else DEFAULT_DEPTH[suite]
        results[suite] = {"depth": d, "checks": SUITES[suite](d)}
    return results
