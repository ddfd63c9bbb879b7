"""The Hopf algebra spanned by core graphs.

An element is a dict from monomials to rationals.  A monomial is the sorted
tuple of canonical keys of the components that carry at least one edge;
edge-free components are the unit and disappear.  Leaves stay on the
components that carry them.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from .canon import canonical_form
from .characters import subgraph_masks
from .model import Graph

__all__ = [
    "monomial",
    "representative",
    "multiply",
    "coproduct",
    "antipode",
    "antipode_of_monomial",
    "id_star_antipode",
    "antipode_star_id",
    "evaluate",
    "core_subgraph_classes",
]

_representatives: dict = {}


def monomial(g: Graph) -> tuple:
    keys = []
    for part in g.component_graphs():
        if part.n_edges:
            key = canonical_form(part).key
            _representatives.setdefault(key, part)
            keys.append(key)
    return tuple(sorted(keys))


def representative(key) -> Graph:
    """A graph registered under the canonical key."""
    return _representatives[key]


def multiply(a: dict, b: dict) -> dict:
    out = defaultdict(Fraction)
    for ma, ca in a.items():
        for mb, cb in b.items():
            out[tuple(sorted(ma + mb))] += ca * cb
    return {m: c for m, c in out.items() if c}


def _add_into(target, element, factor=1):
    for m, c in element.items():
        target[m] += factor * c


def coproduct(g: Graph) -> dict:
    """Delta(g) = sum over core subgraphs of gamma (x) g/gamma, as {(left, right): count}."""
    out = defaultdict(int)
    for mask in subgraph_masks(g, core_only=True):
        out[(monomial(g.subgraph(mask)), monomial(g.contract(mask)))] += 1
    return dict(out)


_antipode_memo: dict = {}


def _antipode_key(key) -> dict:
    if key in _antipode_memo:
        return _antipode_memo[key]
    g = _representatives[key]
    full = (1 << g.n_edges) - 1
    total = defaultdict(Fraction)
    for mask in subgraph_masks(g, core_only=True):
        if mask == full:
            continue
        left = antipode_of_monomial(monomial(g.subgraph(mask)))
        right = {monomial(g.contract(mask)): Fraction(1)}
        _add_into(total, multiply(left, right), -1)
    result = {m: c for m, c in total.items() if c}
    _antipode_memo[key] = result
    return result


def antipode_of_monomial(mono: tuple) -> dict:
    out = {(): Fraction(1)}
    for key in mono:
        out = multiply(out, _antipode_key(key))
    return out


def antipode(g: Graph) -> dict:
    """S(g) = -sum over proper core subgraphs gamma of S(gamma) g/gamma, with S(unit) = unit."""
    if not g.is_core:
        raise ValueError("the antipode is defined on core graphs only")
    return antipode_of_monomial(monomial(g))


def id_star_antipode(g: Graph) -> dict:
    """sum over core gamma of gamma * S(g/gamma); the unit on edge-free g, zero otherwise."""
    total = defaultdict(Fraction)
    for mask in subgraph_masks(g, core_only=True):
        left = {monomial(g.subgraph(mask)): Fraction(1)}
        _add_into(total, multiply(left, antipode_of_monomial(monomial(g.contract(mask)))))
    return {m: c for m, c in total.items() if c}


def antipode_star_id(g: Graph) -> dict:
    total = defaultdict(Fraction)
    for mask in subgraph_masks(g, core_only=True):
        left = antipode_of_monomial(monomial(g.subgraph(mask)))
        _add_into(total, multiply(left, {monomial(g.contract(mask)): Fraction(1)}))
    return {m: c for m, c in total.items() if c}


def evaluate(character, element: dict) -> Fraction:
    """Extend a character multiplicatively to an algebra element."""
    total = Fraction(0)
    for mono, coeff in element.items():
        value = Fraction(coeff)
        for key in mono:
            value *= character(_representatives[key])
        total += value
    return total


def core_subgraph_classes(g: Graph) -> dict:
    """Isomorphism classes of core subgraphs (as cut-open graphs) with their multiplicities."""
    out = defaultdict(int)
    for mask in subgraph_masks(g, core_only=True):
        out[canonical_form(g.subgraph(mask)).key] += 1
    return dict(out)
