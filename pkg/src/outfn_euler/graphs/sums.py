"""Weighted sums over isomorphism classes: sum of char(G) / |Aut G|."""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from ..arith import as_rational, double_factorial_odd, factorial
from .canon import canonical_form
from .characters import TAU, subgraph_masks
from .enumerate import enumerate_graphs

__all__ = [
    "character_sum",
    "leaf_labeled_character_sum",
    "leaf_labeled_classes",
    "vertex_weight_sum",
    "labeled_counting_sides",
]


def character_sum(loop_order: int, leaves: int, char, connected: bool = True) -> Fraction:
    total = Fraction(0)
    for cls in enumerate_graphs(loop_order, leaves, connected=connected):
        total += char(cls.graph) / cls.aut
    return total


def leaf_labeled_classes(loop_order: int, leaves: int) -> list:
    """(graph, labels, |PAut|) per leaf-labeled class, found by trying every labeling."""
    out = []
    for cls in enumerate_graphs(loop_order, leaves, connected=True):
        seen = {}
        for labels in permutations(range(leaves)):
            form = canonical_form(cls.graph, labels)
            seen.setdefault(form.key, (cls.graph, labels, form.aut))
        out.extend(seen[k] for k in sorted(seen))
    return out


def leaf_labeled_character_sum(rank: int, leaves: int, char, method: str = "direct") -> Fraction:
    """sum char(G)/|PAut G| over connected leaf-labeled graphs of the given rank.

    method "direct" lists labeled classes and their leaf-fixing groups;
    "factorial" multiplies the unlabeled sum by leaves!.
    """
    if method == "factorial":
        return factorial(leaves) * character_sum(rank - 1, leaves, char, connected=True)
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    total = Fraction(0)
    for graph, _labels, paut in leaf_labeled_classes(rank - 1, leaves):
        total += char(graph) / paut
    return total


def _weight_function(weights):
    if callable(weights):
        return lambda s: as_rational(weights(s))
    return lambda s: as_rational(weights[s])


def vertex_weight_sum(loop_order: int, weights) -> Fraction:
    """sum over leafless, possibly disconnected graphs of prod_v b_{|v|} / |Aut|."""
    weight = _weight_function(weights)
    total = Fraction(0)
    for cls in enumerate_graphs(loop_order, 0, connected=False):
        value = Fraction(1)
        for d in cls.graph.valences:
            value *= weight(d)
        total += value / cls.aut
    return total


def labeled_counting_sides(max_loop_order: int, char=TAU):
    """Both sides of the cut-edge counting identity, coefficient of z^j w^l with j + l <= max_loop_order.

    Left: leafless graphs G with |G| = j + l, summed over subgraphs gamma with
    l cut edges and |gamma| = j, weighted char(gamma)/|Aut G|.
    Right: (2l - 1)!! times the sum of char(gamma)/|Aut gamma| over graphs with
    2l leaves and |gamma| = j.
    """
    left, right = {}, {}
    for total_order in range(0, max_loop_order + 1):
        for cls in enumerate_graphs(total_order, 0, connected=False):
            g = cls.graph
            for mask in subgraph_masks(g, core_only=False):
                gamma = g.subgraph(mask)
                cut = g.n_edges - bin(mask).count("1")
                key = (total_order - cut, cut)
                left[key] = left.get(key, Fraction(0)) + char(gamma) / cls.aut
    for key in list(left) + [(j, l) for l in range(3 * max_loop_order + 1)
                             for j in range(-l, max_loop_order - l + 1)]:
        if key in right:
            continue
        j, l = key
        value = Fraction(0)
        for cls in enumerate_graphs(j, 2 * l, connected=False):
            value += char(cls.graph) / cls.aut
        right[key] = double_factorial_odd(l) * value
    for key in right:
        left.setdefault(key, Fraction(0))
    return left, right
