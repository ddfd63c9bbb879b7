"""Multiplicative graph functionals and their convolution over core subgraphs."""
from __future__ import annotations

from fractions import Fraction

from .._backend import kernels
from ..arith import factorial
from .model import Graph

__all__ = [
    "Character",
    "tau",
    "sigma",
    "xi",
    "unit",
    "TAU",
    "SIGMA",
    "XI",
    "UNIT",
    "CHARACTERS",
    "subgraph_masks",
    "subgraphs",
    "convolve",
    "convolution_check",
]


def tau(g: Graph) -> Fraction:
    """Sum of (-1)^(edges) over subforests."""
    us, vs = g.ends_lists()
    return Fraction(kernels.signed_forest_sum(g.n_vertices, us, vs, -1))


def sigma(g: Graph) -> Fraction:
    return Fraction(-1 if g.n_edges % 2 else 1)


def xi(g: Graph) -> Fraction:
    """(-1)^v times the product of (valence - 2)! over vertices."""
    out = -1 if g.n_vertices % 2 else 1
    for d in g.valences:
        if d < 2:
            raise ValueError("xi needs every vertex to have valence at least 2")
        out *= factorial(d - 2)
    return Fraction(out)


def unit(g: Graph) -> Fraction:
    return Fraction(1 if g.n_edges == 0 else 0)


class Character:
    """A named rational-valued function on graphs."""

    __slots__ = ("name", "evaluate")

    def __init__(self, name: str, evaluate):
        self.name = name
        self.evaluate = evaluate

    def __call__(self, g: Graph) -> Fraction:
        return Fraction(self.evaluate(g))

    def __repr__(self):
        return f"Character({self.name})"


TAU = Character("tau", tau)
SIGMA = Character("sigma", sigma)
XI = Character("xi", xi)
UNIT = Character("unit", unit)
CHARACTERS = {c.name: c for c in (TAU, SIGMA, XI, UNIT)}


def subgraph_masks(g: Graph, core_only: bool) -> list[int]:
    """Edge subsets in increasing bitmask order, bit i standing for g.edges[i]."""
    count = g.n_edges
    if count > kernels.MAX_EDGES:
        raise OverflowError("too many edges for subset enumeration")
    if not core_only:
        return list(range(1 << count))
    us, vs = g.ends_lists()
    return [m for m in range(1 << count) if kernels.is_bridgeless(g.n_vertices, us, vs, m)]


def subgraphs(g: Graph, core_only: bool = False) -> list[tuple[Graph, Graph]]:
    """(gamma, g/gamma) for every edge subset, or every bridgeless one."""
    return [(g.subgraph(m), g.contract(m)) for m in subgraph_masks(g, core_only)]


def convolve(phi, psi, g: Graph) -> Fraction:
    """sum over core subgraphs gamma of phi(gamma) psi(g/gamma)."""
    total = Fraction(0)
    for gamma, quotient in subgraphs(g, core_only=True):
        left = phi(gamma)
        if left:
            total += left * psi(quotient)
    return total


def convolution_check(g: Graph) -> Fraction:
    """sum over all subgraphs gamma of tau(gamma) (-1)^(edges of g/gamma)."""
    us, vs = g.ends_lists()
    total = 0
    full = g.n_edges
    for m in range(1 << full):
        sign = -1 if (full - bin(m).count("1")) % 2 else 1
        total += sign * kernels.signed_forest_sum(g.n_vertices, us, vs, m)
    return Fraction(total)
