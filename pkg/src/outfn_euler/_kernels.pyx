# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels; same API and results as _pykernels."""
from libc.stdlib cimport free, malloc

from . import _pykernels

MAX_EDGES = 62


cdef int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        x = parent[x]
    return x


cdef long long _forests(int i, int m, int* eu, int* ev, int* parent, int* size) noexcept nogil:
    if i == m:
        return 1
    cdef long long total = _forests(i + 1, m, eu, ev, parent, size)
    cdef int a = _find(parent, eu[i])
    cdef int b = _find(parent, ev[i])
    cdef int t
    if a != b:
        if size[a] < size[b]:
            t = a
            a = b
            b = t
        parent[b] = a
        size[a] += size[b]
        total -= _forests(i + 1, m, eu, ev, parent, size)
        parent[b] = b
        size[a] -= size[b]
    return total


cdef int* _int_buffer(Py_ssize_t n) except NULL:
    cdef int* out = <int*>malloc((n if n > 0 else 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    return out


def _check(ends_u, ends_v):
    if len(ends_u) != len(ends_v):
        raise ValueError("edge end lists differ in length")
    if len(ends_u) > MAX_EDGES:
        raise OverflowError(f"at most {MAX_EDGES} edges supported")


def signed_forest_sum(int n_vertices, ends_u, ends_v, long long mask=-1):
    """Sum of (-1)^|F| over the forests F among the edges selected by mask."""
    _check(ends_u, ends_v)
    cdef Py_ssize_t total_edges = len(ends_u)
    cdef int* eu = _int_buffer(total_edges)
    cdef int* ev = _int_buffer(total_edges)
    cdef int* parent = _int_buffer(n_vertices)
    cdef int* size = _int_buffer(n_vertices)
    cdef int m = 0
    cdef Py_ssize_t i
    cdef long long result
    try:
        for i in range(total_edges):
            if (mask >> i) & 1 and ends_u[i] != ends_v[i]:
                eu[m] = ends_u[i]
                ev[m] = ends_v[i]
                m += 1
        for i in range(n_vertices):
            parent[i] = i
            size[i] = 1
        result = _forests(0, m, eu, ev, parent, size)
    finally:
        free(eu)
        free(ev)
        free(parent)
        free(size)
    return result


def is_bridgeless(int n_vertices, ends_u, ends_v, long long mask=-1):
    """True when no selected edge disconnects its endpoints on removal."""
    _check(ends_u, ends_v)
    cdef Py_ssize_t count = len(ends_u)
    cdef int* eu = _int_buffer(count)
    cdef int* ev = _int_buffer(count)
    cdef int* parent = _int_buffer(n_vertices)
    cdef int m = 0
    cdef int skip, i, a, b, v
    cdef bint ok = True
    try:
        for i in range(count):
            if (mask >> i) & 1:
                eu[m] = ends_u[i]
                ev[m] = ends_v[i]
                m += 1
        for skip in range(m):
            if eu[skip] == ev[skip]:
                continue
            for v in range(n_vertices):
                parent[v] = v
            for i in range(m):
                if i != skip:
                    a = _find(parent, eu[i])
                    b = _find(parent, ev[i])
                    if a != b:
                        parent[a] = b
            if _find(parent, eu[skip]) != _find(parent, ev[skip]):
                ok = False
                break
    finally:
        free(eu)
        free(ev)
        free(parent)
    return ok


cdef struct Search:
    int n
    int* adj
    int* slot_start
    int* slot_end
    int* members
    int* order
    int* used
    int* code
    int* best
    int* best_order
    long long count
    long long generation


cdef void _descend(Search* s, int p, int state) noexcept nogil:
    cdef int n = s.n
    cdef int tied = n + 1
    cdef int off, idx, v, q, child, cmp
    cdef long long seen
    if p == n:
        if state == tied:
            s.count += 1
        else:
            for q in range(n * (n + 1) // 2):
                s.best[q] = s.code[q]
            for q in range(n):
                s.best_order[q] = s.order[q]
            s.count = 1
            s.generation += 1
        return
    off = p * (p + 1) // 2
    for idx in range(s.slot_start[p], s.slot_end[p]):
        v = s.members[idx]
        if s.used[v]:
            continue
        for q in range(p):
            s.code[off + q] = s.adj[v * n + s.order[q]]
        s.code[off + p] = s.adj[v * n + v]
        child = state
        if state == tied:
            cmp = 0
            for q in range(p + 1):
                if s.code[off + q] != s.best[off + q]:
                    cmp = 1 if s.code[off + q] > s.best[off + q] else -1
                    break
            if cmp > 0:
                continue
            if cmp < 0:
                child = p
        seen = s.generation
        s.used[v] = 1
        s.order[p] = v
        _descend(s, p + 1, child)
        s.used[v] = 0
        if s.generation != seen:
            state = tied


def canon_search(int n, adj, cells):
    """Order vertices cell by cell to minimize the lower-triangle code of adj.

    Returns (best order, number of orders reaching the minimum).
    """
    if n > 20:
        return _pykernels.canon_search(n, adj, cells)
    cdef Search s
    cdef int i, p = 0, idx = 0, start
    s.n = n
    s.adj = _int_buffer(n * n)
    s.slot_start = _int_buffer(n)
    s.slot_end = _int_buffer(n)
    s.members = _int_buffer(n)
    s.order = _int_buffer(n)
    s.used = _int_buffer(n)
    s.code = _int_buffer(n * (n + 1) // 2)
    s.best = _int_buffer(n * (n + 1) // 2)
    s.best_order = _int_buffer(n)
    s.count = 0
    s.generation = 0
    try:
        for i in range(n * n):
            s.adj[i] = adj[i]
        for cell in cells:
            start = idx
            for v in cell:
                s.members[idx] = v
                idx += 1
            for i in range(len(cell)):
                s.slot_start[p] = start
                s.slot_end[p] = idx
                p += 1
        for i in range(n):
            s.used[i] = 0
        _descend(&s, 0, -1)
        order = [s.best_order[i] for i in range(n)]
        count = s.count
    finally:
        free(s.adj)
        free(s.slot_start)
        free(s.slot_end)
        free(s.members)
        free(s.order)
        free(s.used)
        free(s.code)
        free(s.best)
        free(s.best_order)
    return order, count
