import subprocess
import sys
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from outfn_euler import _backend, _pykernels


@st.composite
def edge_lists(draw, max_vertices=5, max_edges=8):
    n = draw(st.integers(1, max_vertices))
    vertex = st.integers(0, n - 1)
    edges = draw(st.lists(st.tuples(vertex, vertex), max_size=max_edges))
    return n, [u for u, _ in edges], [v for _, v in edges]


def acyclic(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def connected_pairs(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return find


@settings(max_examples=80, deadline=None)
@given(edge_lists(), st.integers(0, 255))
def test_forest_sum_matches_subsets(backend, data, mask):
    n, eu, ev = data
    chosen = [(u, v) for i, (u, v) in enumerate(zip(eu, ev)) if mask >> i & 1]
    expected = sum((-1) ** r for r in range(len(chosen) + 1)
                   for subset in combinations(chosen, r) if acyclic(n, subset))
    assert backend.signed_forest_sum(n, eu, ev, mask) == expected


@settings(max_examples=80, deadline=None)
@given(edge_lists())
def test_bridgeless_matches_removal(backend, data):
    n, eu, ev = data
    edges = list(zip(eu, ev))
    expected = True
    for i, (u, v) in enumerate(edges):
        find = connected_pairs(n, edges[:i] + edges[i + 1:])
        if find(u) != find(v):
            expected = False
    assert bool(backend.is_bridgeless(n, eu, ev)) is expected


def brute_canon(n, adj, cells):
    best, count = None, 0
    for parts in product(*(permutations(cell) for cell in cells)):
        order = [v for part in parts for v in part]
        code = [adj[order[p] * n + order[q]] for p in range(n) for q in range(p + 1)]
        if best is None or code < best:
            best, count = code, 1
        elif code == best:
            count += 1
    return best, count


@st.composite
def searches(draw):
    n = draw(st.integers(1, 6))
    adj = [0] * (n * n)
    for u in range(n):
        for v in range(u, n):
            adj[u * n + v] = adj[v * n + u] = draw(st.integers(0, 2))
    verts = draw(st.permutations(list(range(n))))
    cuts = sorted(draw(st.sets(st.integers(1, n - 1), max_size=n - 1))) if n > 1 else []
    bounds = [0] + cuts + [n]
    cells = [list(verts[a:b]) for a, b in zip(bounds, bounds[1:])]
    return n, adj, cells


@settings(max_examples=100, deadline=None)
@given(searches())
def test_canon_search_matches_bruteforce(backend, data):
    n, adj, cells = data
    order, count = backend.canon_search(n, adj, cells)
    best, expected = brute_canon(n, adj, cells)
    code = [adj[order[p] * n + order[q]] for p in range(n) for q in range(p + 1)]
    assert code == best and count == expected


def test_edge_limit(backend):
    ends = [0] * (_pykernels.MAX_EDGES + 1)
    with pytest.raises(OverflowError):
        backend.signed_forest_sum(1, ends, ends)
    with pytest.raises(ValueError):
        backend.is_bridgeless(2, [0], [])


def test_backend_selection_respects_pure_flag():
    code = "from outfn_euler import _backend; print(_backend.describe())"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"OUTFN_EULER_PURE": "1", "PATH": ""}, check=True).stdout
    assert out.strip() == "kernels=python bigint=int"
    assert _backend.describe().startswith("kernels=")
