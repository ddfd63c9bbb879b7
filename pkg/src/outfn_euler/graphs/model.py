"""Graphs as half-edges with a vertex partition and an involution."""
from __future__ import annotations

import json

from .._backend import kernels

__all__ = ["Graph", "disjoint_union"]


class Graph:
    """Half-edge h sits at vertex vertex_of[h] and is glued to involution[h].

    Fixed points of the involution are leaves, 2-cycles are edges.
    """

    __slots__ = ("vertex_of", "involution", "n_vertices", "_memo")

    def __init__(self, vertex_of, involution, n_vertices: int | None = None):
        vertex_of = tuple(int(v) for v in vertex_of)
        involution = tuple(int(h) for h in involution)
        if len(vertex_of) != len(involution):
            raise ValueError("vertex_of and involution differ in length")
        if n_vertices is None:
            n_vertices = max(vertex_of, default=-1) + 1
        size = len(involution)
        for h, k in enumerate(involution):
            if not 0 <= k < size or involution[k] != h:
                raise ValueError(f"involution is not self-inverse at half-edge {h}")
        if any(not 0 <= v < n_vertices for v in vertex_of):
            raise ValueError("vertex id out of range")
        self.vertex_of = vertex_of
        self.involution = involution
        self.n_vertices = n_vertices
        self._memo = {}

    # construction

    @classmethod
    def from_edges(cls, n_vertices: int, edges=(), leaves=()) -> Graph:
        """Edges as vertex pairs (loops allowed), leaves as the vertex each one hangs from."""
        vertex_of, involution = [], []
        for u, v in edges:
            h = len(vertex_of)
            vertex_of += [u, v]
            involution += [h + 1, h]
        for v in leaves:
            vertex_of.append(v)
            involution.append(len(involution))
        return cls(vertex_of, involution, n_vertices)

    @classmethod
    def rose(cls, loops: int, leaves: int = 0) -> Graph:
        return cls.from_edges(1, [(0, 0)] * loops, [0] * leaves)

    @classmethod
    def theta(cls) -> Graph:
        return cls.from_edges(2, [(0, 1)] * 3)

    @classmethod
    def dumbbell(cls) -> Graph:
        return cls.from_edges(2, [(0, 0), (0, 1), (1, 1)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        return cls.rose(0, leaves)

    @classmethod
    def empty(cls) -> Graph:
        return cls((), (), 0)

    # structure

    def _cached(self, name, build):
        memo = self._memo
        if name not in memo:
            memo[name] = build()
        return memo[name]

    @property
    def n_half_edges(self) -> int:
        return len(self.vertex_of)

    @property
    def edges(self) -> tuple:
        """Edges as half-edge pairs (h, involution[h]) with h smaller, in half-edge order."""
        return self._cached("edges", lambda: tuple(
            (h, k) for h, k in enumerate(self.involution) if h < k))

    @property
    def leaves(self) -> tuple:
        return self._cached("leaves", lambda: tuple(
            h for h, k in enumerate(self.involution) if h == k))

    @property
    def edge_ends(self) -> tuple:
        """Edges as vertex pairs, aligned with edges."""
        return self._cached("ends", lambda: tuple(
            (self.vertex_of[h], self.vertex_of[k]) for h, k in self.edges))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_leaves(self) -> int:
        return len(self.leaves)

    @property
    def loop_order(self) -> int:
        """e - v; one less than the rank of a connected graph."""
        return self.n_edges - self.n_vertices

    @property
    def valences(self) -> tuple:
        def build():
            out = [0] * self.n_vertices
            for v in self.vertex_of:
                out[v] += 1
            return tuple(out)
        return self._cached("valences", build)

    @property
    def is_admissible(self) -> bool:
        return all(d >= 3 for d in self.valences)

    @property
    def components(self) -> tuple:
        """Vertex sets of the connected components, ordered by smallest vertex."""
        def build():
            parent = list(range(self.n_vertices))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for u, v in self.edge_ends:
                a, b = find(u), find(v)
                if a != b:
                    parent[max(a, b)] = min(a, b)
            groups = {}
            for v in range(self.n_vertices):
                groups.setdefault(find(v), []).append(v)
            return tuple(tuple(g) for _, g in sorted(groups.items()))
        return self._cached("components", build)

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    @property
    def rank(self) -> int:
        """First Betti number."""
        return self.n_edges - self.n_vertices + len(self.components)

    @property
    def has_cycle(self) -> bool:
        return self.rank > 0

    @property
    def is_core(self) -> bool:
        """Bridgeless: removing any single edge leaves its endpoints connected."""
        def build():
            us = [u for u, _ in self.edge_ends]
            vs = [v for _, v in self.edge_ends]
            return bool(kernels.is_bridgeless(self.n_vertices, us, vs, -1))
        return self._cached("core", build)

    def ends_lists(self):
        ends = self.edge_ends
        return [u for u, _ in ends], [v for _, v in ends]

    # operations

    def subgraph(self, mask: int) -> Graph:
        """Keep the edges selected by the bitmask; the others are cut into leaf pairs."""
        inv = list(self.involution)
        for i, (h, k) in enumerate(self.edges):
            if not mask >> i & 1:
                inv[h], inv[k] = h, k
        return Graph(self.vertex_of, inv, self.n_vertices)

    def contract(self, mask: int) -> Graph:
        """Collapse the selected edges: merge their endpoints and drop their half-edges."""
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        gone = set()
        for i, ((h, k), (u, v)) in enumerate(zip(self.edges, self.edge_ends)):
            if mask >> i & 1:
                gone.update((h, k))
                a, b = find(u), find(v)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        roots = sorted({find(v) for v in range(self.n_vertices)})
        new_id = {r: i for i, r in enumerate(roots)}
        kept = [h for h in range(self.n_half_edges) if h not in gone]
        position = {h: i for i, h in enumerate(kept)}
        vertex_of = [new_id[find(self.vertex_of[h])] for h in kept]
        involution = [position[self.involution[h]] for h in kept]
        return Graph(vertex_of, involution, len(roots))

    def component_graphs(self) -> list:
        """Each connected component as its own graph, half-edges in original order."""
        out = []
        for comp in self.components:
            local = {v: i for i, v in enumerate(comp)}
            kept = [h for h in range(self.n_half_edges) if self.vertex_of[h] in local]
            position = {h: i for i, h in enumerate(kept)}
            out.append(Graph([local[self.vertex_of[h]] for h in kept],
                             [position[self.involution[h]] for h in kept], len(comp)))
        return out

    # comparison and exchange

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n_vertices, self.vertex_of, self.involution) == (
            other.n_vertices, other.vertex_of, other.involution)

    def __hash__(self):
        return hash((self.n_vertices, self.vertex_of, self.involution))

    def __repr__(self):
        return (f"Graph(v={self.n_vertices}, e={self.n_edges}, leaves={self.n_leaves}, "
                f"edges={list(self.edge_ends)}, leaf_at={[self.vertex_of[h] for h in self.leaves]})")

    def to_dict(self) -> dict:
        return {
            "half_edges": self.n_half_edges,
            "n_vertices": self.n_vertices,
            "vertex_of": list(self.vertex_of),
            "involution": list(self.involution),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Graph:
        g = cls(data["vertex_of"], data["involution"], data.get("n_vertices"))
        if "half_edges" in data and data["half_edges"] != g.n_half_edges:
            raise ValueError("half_edges count does not match vertex_of")
        return g

    @classmethod
    def from_json(cls, text: str) -> Graph:
        return cls.from_dict(json.loads(text))


def disjoint_union(*graphs: Graph) -> Graph:
    vertex_of, involution = [], []
    offset_v = 0
    for g in graphs:
        offset_h = len(vertex_of)
        vertex_of += [v + offset_v for v in g.vertex_of]
        involution += [h + offset_h for h in g.involution]
        offset_v += g.n_vertices
    return Graph(vertex_of, involution, offset_v)
