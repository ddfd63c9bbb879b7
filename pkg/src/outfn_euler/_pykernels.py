"""Pure-Python graph kernels; the Cython module _kernels mirrors this API."""
from __future__ import annotations

__all__ = ["signed_forest_sum", "is_bridgeless", "canon_search", "MAX_EDGES"]

MAX_EDGES = 62


def _check(ends_u, ends_v):
    if len(ends_u) != len(ends_v):
        raise ValueError("edge end lists differ in length")
    if len(ends_u) > MAX_EDGES:
        raise OverflowError(f"at most {MAX_EDGES} edges supported")


def signed_forest_sum(n_vertices, ends_u, ends_v, mask=-1):
    """Sum of (-1)^|F| over the forests F among the edges selected by mask."""
    _check(ends_u, ends_v)
    edges = [(u, v) for i, (u, v) in enumerate(zip(ends_u, ends_v)) if mask >> i & 1 and u != v]
    parent = list(range(n_vertices))
    size = [1] * n_vertices

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def walk(i):
        if i == len(edges):
            return 1
        total = walk(i + 1)
        a, b = find(edges[i][0]), find(edges[i][1])
        if a != b:
            if size[a] < size[b]:
                a, b = b, a
            parent[b] = a
            size[a] += size[b]
            total -= walk(i + 1)
            parent[b] = b
            size[a] -= size[b]
        return total

    return walk(0)


def is_bridgeless(n_vertices, ends_u, ends_v, mask=-1):
    """True when no selected edge disconnects its endpoints on removal."""
    _check(ends_u, ends_v)
    chosen = [i for i in range(len(ends_u)) if mask >> i & 1]
    for skip in chosen:
        u, v = ends_u[skip], ends_v[skip]
        if u == v:
            continue
        parent = list(range(n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in chosen:
            if i != skip:
                a, b = find(ends_u[i]), find(ends_v[i])
                if a != b:
                    parent[a] = b
        if find(u) != find(v):
            return False
    return True


def canon_search(n, adj, cells):
    """Order vertices cell by cell to minimize the lower-triangle code of adj.

    adj is the flat n*n multiplicity matrix (loops on the diagonal), cells
    the ordered vertex cells. Returns (best order, number of orders reaching
    the minimum); the count is the number of cell-respecting automorphisms.
    """
    tied = n + 1  # marker: the current prefix equals the best code so far
    slot_cell = []
    for ci, cell in enumerate(cells):
        slot_cell.extend([ci] * len(cell))
    order = []
    rows = []
    used = [False] * n
    best = []
    best_order = []
    count = 0
    generation = 0

    def descend(p, state):
        # state: tied, or the level where this path fell below the best (-1: no best yet)
        nonlocal count, best, best_order, generation
        if p == n:
            if state == tied:
                count += 1
            else:
                best = list(rows)
                best_order = list(order)
                count = 1
                generation += 1
            return
        for v in cells[slot_cell[p]]:
            if used[v]:
                continue
            base = v * n
            row = [adj[base + order[q]] for q in range(p)]
            row.append(adj[base + v])
            child = state
            if state == tied:
                ref = best[p]
                if row > ref:
                    continue
                if row < ref:
                    child = p
            seen = generation
            used[v] = True
            order.append(v)
            rows.append(row)
            descend(p + 1, child)
            rows.pop()
            order.pop()
            used[v] = False
            if generation != seen:
                state = tied

    descend(0, -1)
    return best_order, count
