import pytest

import bcpc


def canon(parts):
    return sorted(tuple(sorted((tuple(x), tuple(y)) for x, y in part)) for part in parts)


def middle_subgraph():
    edges = [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)]
    return bcpc.from_edges(3, 4, edges)


def test_graph_basics():
    g = bcpc.from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
    assert (g.n_u, g.n_v, g.m) == (2, 2, 4)
    assert g.neighbors_u(0) == [0, 1]
    assert bcpc.two_hop_order(g) == [0, 1]


def test_loads_edge_list():
    g = bcpc.loads_edge_list("% comment\n5 9\n5 7\n3 9\n")
    assert (g.n_u, g.n_v, g.m) == (2, 2, 3)
    with pytest.raises(bcpc.ParseError):
        bcpc.loads_edge_list("0\n")


def test_maximal_bicliques_match_oracle():
    g = middle_subgraph()
    got = bcpc.maximal_bicliques(g)
    assert got == bcpc.oracle_maximal_bicliques(g)
    assert len(got) == 4


def test_counts():
    g = middle_subgraph()
    assert bcpc.count_ab(g, 2, 2) == 7
    assert bcpc.count_ab(g, 2, 2) == bcpc.oracle_count_ab(g, 2, 2)


def test_all_algorithms_match_oracle():
    for seed in range(6):
        g = bcpc.gen_random(8, 8, 0.4, seed)
        for alpha in (1, 2):
            for beta in (1, 2):
                reference = canon(bcpc.oracle_bcpc(g, alpha, beta))
                for algo in bcpc.ALGORITHMS:
                    result = bcpc.detect(g, algo, alpha, beta)
                    assert canon(result["communities"]) == reference, (algo, seed)


def test_worked_example():
    result = bcpc.detect(middle_subgraph(), "ab-p", 2, 2)
    assert result["stats"]["bcpc"] == 1
    assert result["stats"]["filtered"] == 3
    (community,) = result["communities"]
    assert sorted((tuple(x), tuple(y)) for x, y in community) == [
        ((0, 1), (0, 1, 2)),
        ((0, 1, 2), (1, 2)),
        ((1, 2), (1, 2, 3)),
    ]


def test_stat_chains():
    g = bcpc.gen_block_chain(6, 4, 2)
    pb = bcpc.detect(g, "pbcpc", 2, 2)["stats"]
    pbp = bcpc.detect(g, "pbcpc-plus", 2, 2)["stats"]
    assert pb["n_biclique"] >= pb["pbcpc"] >= pbp["pbcpc_plus"] >= pbp["bcpc"]
    nodes = [bcpc.detect(g, a, 2, 2)["stats"]["tree_nodes"] for a in ("ab", "ab-m", "ab-p")]
    assert nodes[2] <= nodes[1] <= nodes[0]


def test_oracle_refuses_large_inputs():
    g = bcpc.from_edges(20, 20, [(0, 0)])
    with pytest.raises(bcpc.OracleLimitError):
        bcpc.oracle_bcpc(g, 2, 2)
