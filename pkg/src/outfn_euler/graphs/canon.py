"""Canonical encodings and automorphism group orders.

Automorphisms act on half-edges, preserve the vertex partition and commute
with the involution.  Such a map is a vertex permutation preserving the
multiplicity matrix and the leaf counts, together with independent
permutations of parallel edges, flips of loops and permutations of the
leaves at each vertex.  The search below finds the vertex part; the rest is
a product of factorials and powers of two.
"""
from __future__ import annotations

from collections import namedtuple
from functools import lru_cache

from .._backend import kernels
from ..arith import factorial
from .model import Graph

__all__ = [
    "CanonicalForm",
    "canonical_form",
    "canonical_graph",
    "refine_cells",
    "automorphism_count_bruteforce",
]

CanonicalForm = namedtuple("CanonicalForm", "key aut order")


def _ranks(values):
    table = {v: i for i, v in enumerate(sorted(set(values)))}
    return [table[v] for v in values]


def refine_cells(n, adj, colors):
    """Split vertices by color, then by the multiset of (neighbor cell, multiplicity), until stable."""
    ranks = _ranks(colors)
    while True:
        signature = []
        for v in range(n):
            base = v * n
            around = sorted((ranks[u], adj[base + u]) for u in range(n) if u != v and adj[base + u])
            signature.append((ranks[v], tuple(around)))
        new = _ranks(signature)
        if max(new, default=-1) == max(ranks, default=-1):
            break
        ranks = new
    cells = [[] for _ in range(max(ranks, default=-1) + 1)]
    for v in range(n):
        cells[ranks[v]].append(v)
    return cells


def _structure(g: Graph):
    n = g.n_vertices
    adj = [0] * (n * n)
    for u, v in g.edge_ends:
        if u == v:
            adj[u * n + u] += 1
        else:
            adj[u * n + v] += 1
            adj[v * n + u] += 1
    leaf_count = [0] * n
    for h in g.leaves:
        leaf_count[g.vertex_of[h]] += 1
    return n, adj, leaf_count


@lru_cache(maxsize=200_000)
def _canonical(n_vertices, vertex_of, involution, labels):
    g = Graph(vertex_of, involution, n_vertices)
    n, adj, leaf_count = _structure(g)
    tags = [[] for _ in range(n)]
    if labels is not None:
        for h, lab in zip(g.leaves, labels):
            tags[g.vertex_of[h]].append(lab)
    colors = [(g.valences[v], leaf_count[v], adj[v * n + v], tuple(sorted(tags[v]))) for v in range(n)]
    cells = refine_cells(n, adj, colors)
    order, count = kernels.canon_search(n, adj, cells)
    order = tuple(order)
    code = []
    for p, v in enumerate(order):
        base = v * n
        code.extend(adj[base + order[q]] for q in range(p))
        code.append(adj[base + v])
    key = (n, tuple(colors[v] for v in order), tuple(code))
    # vertices without half-edges are invisible to maps of half-edges
    aut = count // factorial(sum(1 for d in g.valences if d == 0))
    for v in range(n):
        loops = adj[v * n + v]
        aut *= 2**loops * factorial(loops)
        if labels is None:
            aut *= factorial(leaf_count[v])
        for u in range(v + 1, n):
            aut *= factorial(adj[v * n + u])
    return CanonicalForm(key, aut, order)


def canonical_form(g: Graph, leaf_labels=None) -> CanonicalForm:
    """Isomorphism-invariant key and |Aut| on half-edges.

    With leaf_labels (one label per leaf, in the order of g.leaves) only
    label-preserving isomorphisms count, and aut is the order of the group
    fixing every leaf.
    """
    labels = None if leaf_labels is None else tuple(leaf_labels)
    if labels is not None and len(labels) != g.n_leaves:
        raise ValueError("need one label per leaf")
    return _canonical(g.n_vertices, g.vertex_of, g.involution, labels)


def canonical_graph(g: Graph) -> Graph:
    """A fixed representative of the isomorphism class of g."""
    n, colors, code = canonical_form(g).key
    edges, leaves = [], []
    pos = 0
    for p in range(n):
        for q in range(p):
            edges += [(q, p)] * code[pos]
            pos += 1
        edges += [(p, p)] * code[pos]
        pos += 1
        leaves += [p] * colors[p][1]
    return Graph.from_edges(n, edges, leaves)


def automorphism_count_bruteforce(g: Graph, fix_leaves: bool = False) -> int:
    """Count half-edge bijections that respect vertices and the involution, by backtracking."""
    size = g.n_half_edges
    inv, vertex_of = g.involution, g.vertex_of
    image = [-1] * size
    taken = [False] * size
    vmap, vback = {}, {}

    def bind_vertex(a, b, undo):
        if a in vmap:
            return vmap[a] == b
        if b in vback:
            return False
        vmap[a], vback[b] = b, a
        undo.append(a)
        return True

    def release(undo):
        for a in undo:
            del vback[vmap.pop(a)]

    def place(h, t, undo_h):
        image[h] = t
        taken[t] = True
        undo_h.append(h)

    def extend(h):
        while h < size and image[h] != -1:
            h += 1
        if h == size:
            return 1
        total = 0
        leaf = inv[h] == h
        for t in range(size):
            if taken[t] or (inv[t] == t) != leaf:
                continue
            if fix_leaves and leaf and t != h:
                continue
            mate, mate_t = inv[h], inv[t]
            if not leaf and taken[mate_t]:
                continue
            undo_v, undo_h = [], []
            ok = bind_vertex(vertex_of[h], vertex_of[t], undo_v)
            if ok:
                place(h, t, undo_h)
                if not leaf:
                    ok = bind_vertex(vertex_of[mate], vertex_of[mate_t], undo_v)
                    if ok:
                        place(mate, mate_t, undo_h)
            if ok:
                total += extend(h + 1)
            for x in undo_h:
                taken[image[x]] = False
                image[x] = -1
            release(undo_v)
        return total

    return extend(0)
