"""netreplica: fit generative network models to a graph and produce
structurally faithful scale-x replicas, with a realism metrics suite and an
algorithm-runtime benchmark harness."""

from .bench import (
    betweenness_approx,
    core_decomposition,
    pagerank,
    spanning_forest,
    timed_suite,
    triangle_count,
)
from .community import Partition, mixing_parameter, modularity, plm
from .errors import EdgeListParseError, NotGraphicalError, UndefinedInputError
from .graph import (
    Graph,
    avg_local_clustering,
    clustering_by_degree,
    connected_components,
    degree_sequence,
    diameter,
    disjoint_union,
    gini,
    load_edge_list,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .metrics import FeatureVector, centrality_distributions, compare, profile
from .models import (
    BarabasiAlbertGenerator,
    ChungLuGenerator,
    EdgeSwitchingGenerator,
    ErdosRenyiGenerator,
    RmatGenerator,
    fit,
    gen_ba,
    gen_cl,
    gen_er,
    gen_esmc,
    gen_rmat,
    is_graphical,
    plfit,
    plfit_star,
)
from .randomize import default_swaps, edge_switch
from .recon import GenerationResult, ReconGenerator, ReconModel, fit_recon, generate, replicate

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Partition",
    "FeatureVector",
    "GenerationResult",
    "ReconModel",
    "ReconGenerator",
    "ErdosRenyiGenerator",
    "BarabasiAlbertGenerator",
    "ChungLuGenerator",
    "EdgeSwitchingGenerator",
    "RmatGenerator",
    "EdgeListParseError",
    "NotGraphicalError",
    "UndefinedInputError",
    "avg_local_clustering",
    "betweenness_approx",
    "centrality_distributions",
    "clustering_by_degree",
    "compare",
    "connected_components",
    "core_decomposition",
    "default_swaps",
    "degree_sequence",
    "diameter",
    "disjoint_union",
    "edge_switch",
    "fit",
    "fit_recon",
    "gen_ba",
    "gen_cl",
    "gen_er",
    "gen_esmc",
    "gen_rmat",
    "generate",
    "gini",
    "is_graphical",
    "load_edge_list",
    "mixing_parameter",
    "modularity",
    "pagerank",
    "parse_edge_list",
    "plfit",
    "plfit_star",
    "plm",
    "profile",
    "read_edge_list",
    "replicate",
    "spanning_forest",
    "timed_suite",
    "triangle_count",
    "write_edge_list",
]
