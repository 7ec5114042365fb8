"""Biclique percolation community detection on bipartite graphs.

Thin wrapper around the compiled core. Communities are lists of maximal
bicliques, each biclique a ``(xs, ys)`` pair of sorted vertex indices.
"""

from ._core import (
    BipartiteGraph,
    OracleLimitError,
    ParseError,
    count_ab,
    detect,
    from_edges,
    gen_block_chain,
    gen_random,
    load_edge_list,
    loads_edge_list,
    maximal_bicliques,
    oracle_bcpc,
    oracle_count_ab,
    oracle_maximal_bicliques,
    two_hop_order,
)

ALGORITHMS = ("mbag", "pbcpc", "pbcpc-plus", "ab", "ab-m", "ab-p")

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "BipartiteGraph",
    "OracleLimitError",
    "ParseError",
    "count_ab",
    "detect",
    "from_edges",
    "gen_block_chain",
    "gen_random",
    "load_edge_list",
    "loads_edge_list",
    "maximal_bicliques",
    "oracle_bcpc",
    "oracle_count_ab",
    "oracle_maximal_bicliques",
    "two_hop_order",
]
