import json
import random
from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from outfn_euler.arith import bernoulli, double_factorial_odd
from outfn_euler.chi import chi_table
from outfn_euler.graphs import (
    SIGMA, TAU, XI, EnumerationCapExceeded, Graph, antipode, antipode_star_id,
    automorphism_count_bruteforce, canonical_form, canonical_graph, character_sum, connected_classes,
    convolution_check, convolve, coproduct, core_subgraph_classes, disjoint_union, enumerate_graphs,
    evaluate, id_star_antipode, labeled_counting_sides, leaf_labeled_character_sum, set_enumeration_cap,
    sigma, tau, vertex_weight_sum, xi,
)


@st.composite
def multigraphs(draw, max_vertices=4, max_edges=6, max_leaves=3):
    n = draw(st.integers(1, max_vertices))
    vertex = st.integers(0, n - 1)
    edges = draw(st.lists(st.tuples(vertex, vertex), max_size=max_edges))
    leaves = draw(st.lists(vertex, max_size=max_leaves))
    return Graph.from_edges(n, edges, leaves)


def relabel(g: Graph, rng: random.Random) -> Graph:
    """Same graph with vertices and half-edges renamed at random."""
    vperm = list(range(g.n_vertices))
    rng.shuffle(vperm)
    hperm = list(range(g.n_half_edges))
    rng.shuffle(hperm)
    vertex_of = [0] * g.n_half_edges
    involution = [0] * g.n_half_edges
    for h in range(g.n_half_edges):
        vertex_of[hperm[h]] = vperm[g.vertex_of[h]]
        involution[hperm[h]] = hperm[g.involution[h]]
    return Graph(vertex_of, involution, g.n_vertices)


def forest_sum_oracle(g: Graph) -> int:
    """Sum of (-1)^|F| over edge subsets F without cycles, by direct subset listing."""
    ends = list(g.edge_ends)
    total = 0
    for size in range(len(ends) + 1):
        for subset in combinations(ends, size):
            parent = list(range(g.n_vertices))

            def find(x):
                while parent[x] != x:
                    x = parent[x]
                return x

            acyclic = True
            for u, v in subset:
                a, b = find(u), find(v)
                if a == b:
                    acyclic = False
                    break
                parent[a] = b
            if acyclic:
                total += (-1) ** size
    return total


# model

def test_model_basics():
    theta = Graph.theta()
    assert (theta.n_edges, theta.n_vertices, theta.loop_order, theta.rank) == (3, 2, 1, 2)
    assert theta.valences == (3, 3)
    assert theta.is_admissible and theta.is_connected and theta.is_core
    assert not Graph.dumbbell().is_core
    star = Graph.star(3)
    assert star.n_leaves == 3 and star.loop_order == -1 and not star.has_cycle
    assert Graph.rose(2, 1).valences == (5,)


def test_invalid_involution_rejected():
    with pytest.raises(ValueError):
        Graph([0, 0], [1, 1])
    with pytest.raises(ValueError):
        Graph([0, 3], [1, 0], 2)


def test_subgraph_and_contraction():
    theta = Graph.theta()
    two = theta.subgraph(0b011)
    assert two.n_edges == 2 and two.n_leaves == 2 and two.n_vertices == 2
    quotient = theta.contract(0b011)
    assert quotient.n_vertices == 1 and quotient.n_edges == 1


def test_json_round_trip():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (2, 0), (0, 0)], [1, 2])
    data = json.loads(g.to_json())
    assert set(data) == {"half_edges", "n_vertices", "vertex_of", "involution"}
    assert Graph.from_json(g.to_json()) == g


# canonical forms and automorphisms

def test_automorphism_examples():
    assert canonical_form(Graph.rose(2)).aut == 8
    assert canonical_form(Graph.theta()).aut == 12
    assert canonical_form(Graph.dumbbell()).aut == 8
    assert canonical_form(Graph.rose(1, 2)).aut == 4
    assert canonical_form(Graph.star(3)).aut == 6
    assert canonical_form(disjoint_union(Graph.theta(), Graph.theta())).aut == 288


@settings(max_examples=60, deadline=None)
@given(multigraphs(), st.integers(0, 10**6))
def test_canonical_key_invariant_under_relabeling(g, seed):
    other = relabel(g, random.Random(seed))
    a, b = canonical_form(g), canonical_form(other)
    assert a.key == b.key and a.aut == b.aut
    assert canonical_graph(g) == canonical_graph(other)


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_vertices=3, max_edges=5, max_leaves=2))
def test_aut_matches_bruteforce(g):
    assert canonical_form(g).aut == automorphism_count_bruteforce(g)


def test_aut_matches_bruteforce_on_enumerated_sample():
    sample = [c for n in (1, 2, 3) for c in enumerate_graphs(n, 0)][::2][:50]
    assert len(sample) == 50
    for cls in sample:
        assert cls.aut == automorphism_count_bruteforce(cls.graph)


def test_distinct_graphs_distinct_keys():
    keys = {canonical_form(c.graph).key for c in enumerate_graphs(2, 0)}
    assert len(keys) == len(enumerate_graphs(2, 0))


# enumeration

def test_rank_two_classes():
    classes = enumerate_graphs(1, 0)
    assert sorted(c.aut for c in classes) == [8, 8, 12]
    assert sum(Fraction(1, c.aut) for c in classes) == Fraction(1, 8) + Fraction(1, 8) + Fraction(1, 12)


@pytest.mark.parametrize("loop_order", [1, 2, 3])
def test_mass_formula_by_valence_multiset(loop_order):
    masses = Counter()
    for cls in enumerate_graphs(loop_order, 0, connected=False):
        masses[tuple(sorted(cls.graph.valences))] += Fraction(1, cls.aut)
    expected = {}
    for v in range(1, 2 * loop_order + 1):
        def multisets(total, count, low):
            if count == 0:
                if total == 0:
                    yield ()
                return
            for d in range(low, total - 3 * (count - 1) + 1):
                for rest in multisets(total - d, count - 1, d):
                    yield (d,) + rest
        for degrees in multisets(2 * (loop_order + v), v, 3):
            symmetry = prod(factorial(d) for d in degrees) * prod(factorial(m) for m in Counter(degrees).values())
            expected[degrees] = Fraction(double_factorial_odd(loop_order + v), symmetry)
    assert dict(masses) == expected


def test_connected_listing_is_connected_and_admissible():
    for cls in enumerate_graphs(2, 2):
        assert cls.graph.is_connected and cls.graph.is_admissible
        assert cls.graph.loop_order == 2 and cls.graph.n_leaves == 2
        assert cls.graph.n_vertices <= 2 * 2 + 2


def test_non_admissible_needs_vertex_bound():
    with pytest.raises(ValueError):
        connected_classes(1, 0, admissible=False)
    trees = connected_classes(-1, 0, admissible=False, max_vertices=2)
    assert [(c.graph.n_vertices, c.graph.n_edges, c.aut) for c in trees] == [(2, 1, 2)]
    cycles = connected_classes(0, 0, admissible=False, max_vertices=2)
    assert sorted((c.graph.n_vertices, c.aut) for c in cycles) == [(1, 2), (2, 2), (2, 4)]


def test_enumeration_cap():
    previous = set_enumeration_cap(3)
    try:
        with pytest.raises(EnumerationCapExceeded):
            enumerate_graphs(4, 1, cap=3)
    finally:
        set_enumeration_cap(previous)


# characters

def test_character_examples():
    assert tau(Graph.rose(2)) == 1
    assert tau(Graph.theta()) == -2
    assert tau(Graph.dumbbell()) == 0
    assert sigma(Graph.theta()) == -1
    assert xi(Graph.theta()) == 1
    assert xi(Graph.rose(2)) == -2
    with pytest.raises(ValueError):
        xi(Graph.from_edges(2, [(0, 1)]))


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_edges=7))
def test_tau_matches_subset_listing(g):
    assert tau(g) == forest_sum_oracle(g)


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_vertices=3, max_edges=4), multigraphs(max_vertices=3, max_edges=4))
def test_characters_multiplicative(a, b):
    both = disjoint_union(a, b)
    assert tau(both) == tau(a) * tau(b)
    assert sigma(both) == sigma(a) * sigma(b)


def test_tau_vanishes_with_separating_edge():
    for n in (1, 2, 3):
        for cls in enumerate_graphs(n, 0):
            if not cls.graph.is_core:
                assert tau(cls.graph) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_character_sums(n):
    ch = chi_table(n).ch
    assert character_sum(n, 0, TAU) == ch[n]
    assert character_sum(n, 0, XI) == ch[n]
    assert character_sum(n, 0, SIGMA) == -bernoulli(n + 1) / (n * (n + 1))


def test_sigma_sum_first_value():
    assert character_sum(1, 0, SIGMA) == Fraction(-1, 12)


@pytest.mark.parametrize("rank, leaves, expected", [(2, 0, Fraction(-1, 24)), (1, 1, Fraction(1, 2)),
                                                    (0, 3, Fraction(1)), (1, 2, Fraction(0))])
def test_leaf_labeled_sums(rank, leaves, expected):
    direct = leaf_labeled_character_sum(rank, leaves, TAU, "direct")
    assert direct == leaf_labeled_character_sum(rank, leaves, TAU, "factorial")
    assert direct == expected


def test_vertex_weight_sum_examples():
    assert vertex_weight_sum(1, lambda s: -1) == Fraction(1, 12)
    assert vertex_weight_sum(2, {3: 0, 4: 0, 5: 0, 6: 0}) == 0


# Hopf algebra

def test_coproduct_of_theta():
    terms = coproduct(Graph.theta())
    assert sum(terms.values()) == 5
    assert terms[((), (canonical_form(Graph.theta()).key,))] == 1


def core_graphs(max_order):
    return [c.graph for n in range(1, max_order + 1) for c in enumerate_graphs(n, 0) if c.graph.is_core]


def test_convolution_inverses_on_core_graphs():
    for g in core_graphs(3):
        assert convolve(TAU, SIGMA, g) == 0
        assert convolve(SIGMA, TAU, g) == 0
        assert id_star_antipode(g) == {}
        assert antipode_star_id(g) == {}
        assert evaluate(TAU, antipode(g)) == SIGMA(g)


def test_unit_on_edge_free_graph():
    assert convolve(TAU, SIGMA, Graph.star(4)) == 1
    assert convolution_check(Graph.star(4)) == 1


def test_antipode_requires_core():
    with pytest.raises(ValueError):
        antipode(Graph.dumbbell())


def test_alternating_subgraph_sum_vanishes():
    for n in (1, 2, 3):
        for cls in enumerate_graphs(n, 0):
            assert convolution_check(cls.graph) == 0


def test_four_leg_example_subgraph_classes():
    g = Graph.from_edges(4, [(0, 2), (0, 3), (1, 3), (1, 2), (2, 3), (2, 3)], [0, 0, 1, 1])
    classes = core_subgraph_classes(g)
    assert len(classes) == 7
    assert sorted(classes.values()) == [1, 1, 1, 1, 2, 2, 4]


def test_labeled_counting_identity():
    left, right = labeled_counting_sides(2)
    assert left == right
    assert left[(0, 0)] == 1
