"""Recognition of hereditary biclique-Helly graphs and maximal biclique enumeration."""

from .baseline import (
    DominationMatrix,
    domination_matrix,
    find_induced_c5_slow,
    find_induced_c6_slow,
    find_non_dominated_c4_slow,
    recognize_hbh_slow,
)
from .bicliques import (
    BicliqueReport,
    DomCounts,
    DominationDigraph,
    EnumerationReport,
    PreconditionError,
    ancestors,
    biclique_optimizations,
    build_d_digraph,
    dom_counts,
    dominator_set,
    enumerate_max_bicliques,
    enumerate_report,
)
from .fast import (
    SafeTripleList,
    UnsafeDominationDigraph,
    UScan,
    build_sigma,
    build_u_digraph,
    find_induced_c5_fast,
    find_induced_c6_fast,
    recognize_hbh_fast,
    run_fast,
    sigma_ids,
)
from .graph import (
    Biclique,
    DegreeOrdering,
    Graph,
    GraphInputError,
    SelfLoopError,
    TwinPartition,
    build_graph,
    degree_order,
    dominates,
    expand_biclique,
    induced_subgraph,
    reduce_twins,
)
from .io import LabeledGraph, ParseError, format_graph, parse_graph, read_graph
from .squares import SquaresTriple, find_triangle, squares_of, squares_stream
from .witness import HBH, NotInClassError, Witness, WitnessKind, validate_witness, witness_problems

__version__ = "0.1.0"
