"""Exact vertex connectivity and vertex-k-maximal r-uniform hypergraphs."""

from .bounds import binom, conjectured_upper, gnk_bound, hl_size, hu_size, lower_bound
from .connectivity import (
    CutResult,
    KappaBarResult,
    SeparationTriple,
    find_t_connected,
    is_connected,
    is_t_connected,
    kappa,
    kappa_bar,
    kappa_bar_bruteforce,
    min_separator,
    min_vertex_cut,
    separation_triple,
)
from .hypergraph import (
    Hypergraph,
    complement,
    complete,
    components,
    crossing_edges,
    delete_vertices,
    disjoint_union,
    empty,
    h_l,
    h_u,
    induced,
    r_join,
    union,
)
from .maximality import MaximalityReport, is_vertex_k_maximal, saturate, verify_lemma_2_1, verify_lemma_2_3

__version__ = "0.1.0"
