"""Gadget constructions for minimum maximal matching reductions, exactly verified.

The package builds the chain from satisfiable unique label cover instances
through weighted gadget graphs, fractional matchings, unweighted blowups,
and bipartite doublings, down to the padded complement gadget driven by
balanced bicliques.  Every constructive step carries an executable check
against exact brute-force solvers; all arithmetic is rational and every
build is deterministic under a seed.
"""

from .bipartite import (
    BipVertex,
    Bipartisation,
    PathCycleDecomposition,
    SsehGadget,
    anti_biclique_bound,
    bipartise,
    cover_from_decomposition,
    decompose,
    double_matching,
    random_planted_biclique,
    sseh_gadget,
    sseh_yes_matching,
)
from .blowup import (
    BlowupGraph,
    BlowupVertex,
    CopyMatching,
    blow_up,
    blowup_maximality_check,
    discretize_matching,
    is_product_cover,
    minimalize_cover,
    product_cover,
    round_half_away,
    total_vertex_cover_check,
)
from .fracmatch import (
    FractionalMatching,
    SaturationReport,
    build_complement_pairing,
    build_empty_set_cycles,
    build_full,
    build_layer_cycles,
    combine,
    validate,
)
from .gadget import (
    GadgetGraph,
    GadgetVertex,
    PlantedIndependentSet,
    biased_weight,
    build_gadget,
    planted_independent_set,
    yes_matching,
)
from .graphs import (
    Bipartite,
    CheckResult,
    Graph,
    matched_vertices,
    random_graph,
    verify_matching,
    verify_maximal_matching,
    verify_vertex_cover,
)
from .kneser import (
    BipartiteKneser,
    build_bipartite_kneser,
    cycle_in_subgraph,
    hamiltonian_cycle,
    validate_hamiltonian_cycle,
)
from .lemmas import LEMMAS, Check, LemmaReport, lemma_ids, verify_lemma
from .experiment import ExperimentConfig, ExperimentResult, run_experiment
from .solvers import (
    SolveResult,
    enumerate_maximal_matchings,
    exact_mbb,
    exact_min_total_vertex_cover,
    exact_min_vertex_cover,
    exact_mmm,
    greedy_maximal_matching,
)
from .ulc import (
    Planted,
    TLabelling,
    UlcInstance,
    check_labelling,
    check_t_labelling,
    generate_yes,
    new_instance,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BipVertex",
    "Bipartisation",
    "Bipartite",
    "BipartiteKneser",
    "BlowupGraph",
    "BlowupVertex",
    "Check",
    "CheckResult",
    "CopyMatching",
    "ExperimentConfig",
    "ExperimentResult",
    "FractionalMatching",
    "GadgetGraph",
    "GadgetVertex",
    "Graph",
    "LEMMAS",
    "LemmaReport",
    "Planted",
    "PlantedIndependentSet",
    "PathCycleDecomposition",
    "SaturationReport",
    "SolveResult",
    "SsehGadget",
    "TLabelling",
    "UlcInstance",
    "anti_biclique_bound",
    "biased_weight",
    "bipartise",
    "blow_up",
    "blowup_maximality_check",
    "build_bipartite_kneser",
    "build_complement_pairing",
    "build_empty_set_cycles",
    "build_full",
    "build_gadget",
    "build_layer_cycles",
    "check_labelling",
    "check_t_labelling",
    "combine",
    "cover_from_decomposition",
    "cycle_in_subgraph",
    "decompose",
    "discretize_matching",
    "double_matching",
    "enumerate_maximal_matchings",
    "exact_mbb",
    "exact_min_total_vertex_cover",
    "exact_min_vertex_cover",
    "exact_mmm",
    "generate_yes",
    "greedy_maximal_matching",
    "hamiltonian_cycle",
    "is_product_cover",
    "lemma_ids",
    "matched_vertices",
    "minimalize_cover",
    "new_instance",
    "planted_independent_set",
    "product_cover",
    "random_graph",
    "random_planted_biclique",
    "round_half_away",
    "run_experiment",
    "sseh_gadget",
    "sseh_yes_matching",
    "total_vertex_cover_check",
    "validate",
    "validate_hamiltonian_cycle",
    "verify_lemma",
    "verify_matching",
    "verify_maximal_matching",
    "verify_vertex_cover",
    "yes_matching",
]
