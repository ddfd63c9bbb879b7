"""Half-edge graphs, their enumeration, characters and the core-graph Hopf algebra."""
from .canon import CanonicalForm, automorphism_count_bruteforce, canonical_form, canonical_graph
from .characters import (
    CHARACTERS, SIGMA, TAU, UNIT, XI, Character, convolution_check, convolve,
    sigma, subgraph_masks, subgraphs, tau, unit, xi,
)
from .enumerate import (
    DEFAULT_CAP, EnumerationCapExceeded, GraphClass, connected_classes,
    enumerate_graphs, set_enumeration_cap,
)
from .hopf import (
    antipode, antipode_of_monomial, antipode_star_id, coproduct,
    core_subgraph_classes, evaluate, id_star_antipode, monomial,
)
from .model import Graph, disjoint_union
from .sums import (
    character_sum, labeled_counting_sides, leaf_labeled_character_sum,
    leaf_labeled_classes, vertex_weight_sum,
)

__all__ = [
    "Graph", "disjoint_union",
    "CanonicalForm", "canonical_form", "canonical_graph", "automorphism_count_bruteforce",
    "Character", "TAU", "SIGMA", "XI", "UNIT", "CHARACTERS",
    "tau", "sigma", "xi", "unit", "subgraph_masks", "subgraphs", "convolve", "convolution_check",
    "GraphClass", "EnumerationCapExceeded", "DEFAULT_CAP", "set_enumeration_cap",
    "enumerate_graphs", "connected_classes",
    "monomial", "coproduct", "antipode", "antipode_of_monomial", "id_star_antipode",
    "antipode_star_id", "evaluate", "core_subgraph_classes",
    "character_sum", "leaf_labeled_character_sum", "leaf_labeled_classes",
    "vertex_weight_sum", "labeled_counting_sides",
]
