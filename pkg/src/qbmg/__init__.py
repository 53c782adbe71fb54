"""Two-colored quasi-best-match graphs: recognition, structure and construction.

The package works with small bipartite two-colored digraphs.  It recognizes
quasi-best-match graphs by their three neighborhood axioms, analyzes induced
paths and cycles of the underlying undirected graph, finds dominating
bicliques and biclique/stable-set splits, decomposes connected recognized
graphs into type-A parts, handles orientations and odd-even digraphs,
constructs graphs from leaf-colored phylogenetic trees with truncation maps,
and exhaustively enumerates and classifies small instances.
"""

from .axioms import (
    AxiomWitness,
    RecognitionReport,
    find_n1_violation,
    find_n2_violation,
    find_n3_violation,
    is_hereditary_on,
    is_qbmg,
    is_qbmg_masks,
    n1_configurations,
    recognize,
)
from .bicliques import (
    Biclique,
    all_bicliques,
    find_dominating_biclique,
    is_dominating_set,
    maximal_bicliques,
)
from .decompose import Decomposition, KosPartition, decompose_type_a, is_type_a, kos_partition
from .dgf import format_dgf, parse_dgf
from .digraph import (
    CanonicalForm,
    Digraph,
    Neighborhood,
    UGraph,
    build_digraph,
    build_ugraph,
    canonical_form,
    equivalent_vertex_pairs,
    induced_subdigraph,
    isomorphic,
    neighbors,
    relabel,
    ugraph_canonical_form,
    ugraphs_isomorphic,
    underlying,
    validate_digraph,
    weak_components,
)
from .enumeration import (
    ClassificationResult,
    TheoremCheck,
    VerifyReport,
    all_bipartite_digraphs,
    classify_qbmgs,
    cycle_template,
    orientations_of,
    path_template,
    verify_paper_counts,
)
from .errors import (
    Disconnected,
    DuplicateEdge,
    InvalidSpec,
    InvalidTruncation,
    LoopEdge,
    MonochromaticEdge,
    NoIntegerSuffix,
    NotBiclique,
    NotBitournament,
    NotOriented,
    NotPhylogenetic,
    NotQbmg,
    NotSurjective,
    ParseError,
    QbmgError,
    TooLarge,
)
from .orientation import (
    OddEvenSpec,
    all_orientations,
    bitournament_report,
    find_odd_even_representation,
    odd_even_digraph,
    orient,
    oriented_biclique_subdigraph,
    star_conditions,
    topological_order,
)
from .paths import (
    InducedCycle,
    InducedPath,
    find_induced_cycle,
    find_induced_path,
    is_cograph,
)
from .trees import (
    LeafColoring,
    PhyloTree,
    TruncationMap,
    best_match_graph,
    lca,
    parity_coloring,
    parse_tree,
    qbmg_from_tree,
    root_truncation,
    search_explanation,
    tree_from_nested,
)

__version__ = "0.1.0"
