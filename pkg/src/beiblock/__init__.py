"""Invariants of binomial edge ideals of block graphs, computed from the graph alone."""

from beiblock.blocks import (
    BlockDecomposition,
    IndecomposableSplit,
    NotBlockGraph,
    clique_degree,
    split_indecomposable,
    validate_block_graph,
)
from beiblock.generate import GeneratorConfig, generate_block_graph
from beiblock.graph import Graph, ParseError, connected_components, induced_subgraph, parse_graph
from beiblock.krull import DimWitness, certify_witness, krull_dim_linear, min_cutset_witness
from beiblock.oracle import (
    CutSet,
    OracleLimitExceeded,
    cutset_stats,
    enumerate_cutsets,
    flower_oracle,
    krull_dim_bruteforce,
    minh_maxh,
)
from beiblock.regularity import (
    compute_regularity,
    depth_projdim,
    eligible_block_count,
    find_end_flower,
    flower_betti,
    is_flower_free,
    longest_induced_path,
    reg_bounds,
)

__version__ = "0.1.0"
