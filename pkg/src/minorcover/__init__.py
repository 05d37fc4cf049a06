"""Minor set covers of dense bipartite graphs and Chimera clique embeddings.

The package builds minor set covers of complete bipartite graphs by
contracting random matching edge sets, virtualizes Chimera hardware graphs
into bipartite form, embeds cliques into ideal hardware, screens faulty
hardware with no-clique-minor criteria, and checks everything against a
brute-force minor oracle.
"""

from .chimera import (
    LEFT,
    RIGHT,
    ChimeraSpec,
    FaultSet,
    QubitCoord,
    VirtualHardware,
    apply_faults,
    build_chimera,
    virtualize,
)
from .embedder import (
    BoundViolation,
    ChainStats,
    EmbeddingVerdict,
    chain_stats,
    choi_lower_bound,
    embed_clique,
    verify_embedding,
)
from .faulty import (
    COVERING,
    INCONCLUSIVE,
    NO_CLIQUE_POSSIBLE,
    UNIFORM,
    CriteriaReport,
    IncompleteBipartite,
    attempt_clique_embedding,
    check_no_clique_criteria,
    crown_graph,
    find_covering_matching,
    incomplete_vertices,
    min_edges_required,
)
from .graph import (
    BipartiteLabeling,
    Graph,
    MinorSequence,
    complement,
    complete_bipartite,
    complete_graph,
    contract_edge,
    contract_matching,
    greedy_random_matching,
    is_bipartite,
    isolated_vertices,
    validate_matching,
)
from .msc import MSCReport, clique_number, msc_complete_bipartite, treewidth_exact, verify_msc
from .oracle import (
    BUDGET_EXCEEDED,
    MINOR,
    NO_MINOR,
    CliqueMinorResult,
    MinorResult,
    is_minor,
    is_subgraph_isomorphic,
    largest_clique_minor,
)

__version__ = "0.1.0"

__all__ = [
    "BUDGET_EXCEEDED",
    "COVERING",
    "INCONCLUSIVE",
    "LEFT",
    "MINOR",
    "NO_CLIQUE_POSSIBLE",
    "NO_MINOR",
    "RIGHT",
    "UNIFORM",
    "BipartiteLabeling",
    "BoundViolation",
    "ChainStats",
    "ChimeraSpec",
    "CliqueMinorResult",
    "CriteriaReport",
    "EmbeddingVerdict",
    "FaultSet",
    "Graph",
    "IncompleteBipartite",
    "MSCReport",
    "MinorResult",
    "MinorSequence",
    "QubitCoord",
    "VirtualHardware",
    "apply_faults",
    "attempt_clique_embedding",
    "build_chimera",
    "chain_stats",
    "check_no_clique_criteria",
    "choi_lower_bound",
    "clique_number",
    "complement",
    "complete_bipartite",
    "complete_graph",
    "contract_edge",
    "contract_matching",
    "crown_graph",
    "embed_clique",
    "find_covering_matching",
    "greedy_random_matching",
    "incomplete_vertices",
    "is_bipartite",
    "is_minor",
    "is_subgraph_isomorphic",
    "isolated_vertices",
    "largest_clique_minor",
    "min_edges_required",
    "msc_complete_bipartite",
    "treewidth_exact",
    "validate_matching",
    "verify_embedding",
    "verify_msc",
    "virtualize",
    "__version__",
]
