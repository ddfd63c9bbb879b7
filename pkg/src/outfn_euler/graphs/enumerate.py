"""Isomorphism classes of graphs with given loop order e - v and leaf count."""
from __future__ import annotations

from collections import Counter, namedtuple
from functools import lru_cache
from itertools import combinations_with_replacement, product

from ..arith import factorial
from .canon import canonical_form, canonical_graph
from .model import Graph, disjoint_union

__all__ = [
    "GraphClass",
    "EnumerationCapExceeded",
    "DEFAULT_CAP",
    "set_enumeration_cap",
    "enumerate_graphs",
    "connected_classes",
]

GraphClass = namedtuple("GraphClass", "graph aut key")

DEFAULT_CAP = 10**7
_cap = [DEFAULT_CAP]


class EnumerationCapExceeded(RuntimeError):
    """More candidate realizations than the configured cap."""


def set_enumeration_cap(cap: int) -> int:
    """Set the per-degree-sequence candidate cap; returns the previous value."""
    if cap < 1:
        raise ValueError("cap must be positive")
    old, _cap[0] = _cap[0], cap
    return old


def _degree_sequences(total, length, low, high):
    """Nonincreasing sequences of the given length and sum with entries in [low, high]."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(high, total - low * (length - 1)), low - 1, -1):
        if first * length < total:
            break
        for rest in _degree_sequences(total - first, length - 1, low, first):
            yield (first,) + rest


def _leaf_splits(degrees, leaves):
    """Leaf counts per vertex, nonincreasing across vertices of equal degree."""
    n = len(degrees)

    def walk(i, left, prev):
        if i == n:
            if left == 0:
                yield ()
            return
        cap = min(degrees[i], left)
        if i and degrees[i] == degrees[i - 1]:
            cap = min(cap, prev)
        for k in range(cap, -1, -1):
            for rest in walk(i + 1, left - k, k):
                yield (k,) + rest

    return walk(0, leaves, 0)


def _matrices(residual):
    """Symmetric multiplicity matrices (loops on the diagonal) with row degrees residual."""
    n = len(residual)
    rem = list(residual)
    rows = [[0] * n for _ in range(n)]

    def fill_row(i):
        if i == n:
            yield [r[:] for r in rows]
            return
        for loops in range(rem[i] // 2, -1, -1):
            rows[i][i] = loops
            left = rem[i] - 2 * loops
            rem[i] -= 2 * loops
            yield from spread(i, i + 1, left)
            rem[i] += 2 * loops
        rows[i][i] = 0

    def spread(i, j, left):
        if j == n:
            if left == 0:
                saved = rem[i]
                rem[i] = 0
                yield from fill_row(i + 1)
                rem[i] = saved
            return
        if sum(rem[j:]) < left:
            return
        for k in range(min(left, rem[j]), -1, -1):
            rows[i][j] = rows[j][i] = k
            rem[j] -= k
            yield from spread(i, j + 1, left - k)
            rem[j] += k
        rows[i][j] = rows[j][i] = 0

    return fill_row(0)


def _connected(matrix):
    n = len(matrix)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in range(n):
            if matrix[v][u] and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def _realize(matrix, leaf_counts):
    n = len(matrix)
    edges = []
    for i in range(n):
        edges += [(i, i)] * matrix[i][i]
        for j in range(i + 1, n):
            edges += [(i, j)] * matrix[i][j]
    leaves = [v for v in range(n) for _ in range(leaf_counts[v])]
    return Graph.from_edges(n, edges, leaves)


@lru_cache(maxsize=None)
def _connected_cached(loop_order, leaves, admissible, max_vertices, cap):
    low = 3 if admissible else 1
    if admissible:
        top = 2 * loop_order + leaves
    elif max_vertices is None:
        raise ValueError("non-admissible enumeration needs max_vertices")
    else:
        top = max_vertices
    if max_vertices is not None:
        top = min(top, max_vertices)
    found = {}
    for v in range(1, top + 1):
        e = v + loop_order
        if e < v - 1:
            continue
        total = 2 * e + leaves
        for degrees in _degree_sequences(total, v, low, total):
            candidates = 0
            for split in _leaf_splits(degrees, leaves):
                residual = [d - s for d, s in zip(degrees, split)]
                for matrix in _matrices(residual):
                    candidates += 1
                    if candidates > cap:
                        raise EnumerationCapExceeded(
                            f"more than {cap} candidates for degrees {degrees}")
                    if not _connected(matrix):
                        continue
                    g = _realize(matrix, split)
                    form = canonical_form(g)
                    if form.key not in found:
                        found[form.key] = GraphClass(canonical_graph(g), form.aut, form.key)
    return tuple(found[k] for k in sorted(found))


def connected_classes(loop_order, leaves, admissible=True, max_vertices=None, cap=None):
    if leaves < 0:
        raise ValueError("leaf count must be nonnegative")
    return _connected_cached(loop_order, leaves, admissible, max_vertices, cap or _cap[0])


def _component_types(loop_rem, leaf_rem, bound):
    """Multisets of (loop order, leaves) for admissible components, nonincreasing."""
    if loop_rem == 0 and leaf_rem == 0:
        yield ()
        return
    for lam in range(min(bound[0], loop_rem + leaf_rem // 3), -2, -1):
        for s in range(leaf_rem, -1, -1):
            if (lam, s) > bound:
                continue
            if lam == -1 and s < 3 or lam == 0 and s < 1:
                continue
            rest_loop, rest_leaf = loop_rem - lam, leaf_rem - s
            if rest_loop < 0 and rest_leaf < -3 * rest_loop:
                continue
            for tail in _component_types(rest_loop, rest_leaf, (lam, s)):
                yield ((lam, s),) + tail


def enumerate_graphs(loop_order, leaves, connected=True, admissible=True, max_vertices=None, cap=None):
    """One GraphClass per isomorphism class with e - v = loop_order and the given leaf count.

    Disconnected classes are assembled from multisets of connected ones; their
    key is the sorted tuple of component keys and their aut is
    prod |Aut c|^m * m! over distinct components c of multiplicity m.
    """
    if connected:
        return list(connected_classes(loop_order, leaves, admissible, max_vertices, cap))
    if not admissible:
        raise ValueError("disconnected enumeration is only defined for admissible graphs")
    out = []
    start = (loop_order + leaves // 3, leaves)
    for types in _component_types(loop_order, leaves, start):
        pools = []
        for kind, mult in sorted(Counter(types).items(), reverse=True):
            classes = connected_classes(kind[0], kind[1], True, max_vertices, cap)
            pools.append(list(combinations_with_replacement(classes, mult)))
        for choice in product(*pools):
            parts = [c for group in choice for c in group]
            aut = 1
            for c in parts:
                aut *= c.aut
            for mult in Counter(c.key for c in parts).values():
                aut *= factorial(mult)
            key = tuple(sorted(c.key for c in parts))
            out.append(GraphClass(disjoint_union(*(c.graph for c in parts)), aut, key))
    out.sort(key=lambda c: c.key)
    return out
