import math
import random

import networkx as nx
import pytest

from theta_forge.linrep import IncidenceGraph
from theta_forge.oracle import brute_c4, brute_theta_count, random_bipartite_graph
from theta_forge.verify import (
    VerificationReport,
    disjoint_3paths,
    find_c4,
    girth,
    max_disjoint_3paths,
    replay_witness,
    verify_theta_free,
)

from helpers import complete_bipartite, even_cycle, path_graph, star_tree, theta_graph, to_nx


def test_c4_in_k22():
    G = complete_bipartite(2, 2)
    r = find_c4(G)
    assert not r.passed
    assert sorted(r.witness["cycle"]) == [0, 1, 2, 3]
    assert replay_witness(G, r)


@pytest.mark.parametrize("G", [star_tree(), path_graph(), even_cycle(3), even_cycle(4)])
def test_c4_free_examples(G):
    assert find_c4(G).passed


def test_c4_free_norm_graph(g23):
    assert find_c4(g23[1]).passed


def test_corrupted_norm_graph_has_c4(g23):
    # join point p to a line through a point that already shares a line with p
    _, G = g23
    p = 0
    l1 = G.point_adj[p][0]
    p2 = next(x for x in G.line_adj[l1] if x != p)
    l2 = next(l for l in G.point_adj[p2] if l not in G.point_adj[p])
    H = G.with_edge(p, l2)
    r = find_c4(H)
    assert not r.passed and replay_witness(H, r)
    assert not replay_witness(G, r)


def test_max_disjoint_k33():
    G = complete_bipartite(3, 3)
    for u in range(3):
        for v in range(3, 6):
            assert max_disjoint_3paths(G, u, v) == 2


def test_max_disjoint_single_path():
    G = path_graph()
    assert max_disjoint_3paths(G, 0, G.P + 1) == 1
    assert disjoint_3paths(G, 0, G.P + 1) == [[0, 3, 1, 4]]


def test_max_disjoint_rejects_same_side():
    G = complete_bipartite(3, 3)
    with pytest.raises(ValueError):
        max_disjoint_3paths(G, 0, 1)


@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_theta_graph_detected(t):
    G = theta_graph(t)
    assert max_disjoint_3paths(G, 0, G.P) == t
    r = verify_theta_free(G, t)
    assert not r.passed
    assert r.witness["pair"] == [0, G.P]
    assert replay_witness(G, r)
    assert verify_theta_free(G, t + 1).passed


def test_k33_contains_c6():
    r = verify_theta_free(complete_bipartite(3, 3), 2)
    assert not r.passed and replay_witness(complete_bipartite(3, 3), r)


def test_norm_graph_23_theta_free(g23):
    r = verify_theta_free(g23[1], 2)
    assert r.passed
    assert r.stats["max_disjoint_paths"] == 1


def test_norm_graph_24_theta_free(g24):
    assert verify_theta_free(g24[1], 2).passed


def test_adjacent_endpoints_are_tested():
    # u ~ v directly plus two 3-paths: still a theta(3, 2) as a subgraph
    G = theta_graph(2)
    H = G.with_edge(0, 0)
    r = verify_theta_free(H, 2)
    assert not r.passed and replay_witness(H, r)


def test_monotone_in_t():
    rng = random.Random(5)
    for _ in range(40):
        G = random_bipartite_graph(rng, 30)
        results = [verify_theta_free(G, t).passed for t in range(2, 7)]
        for a, b in zip(results, results[1:]):
            assert b or not a


def test_max_matches_exact_stats():
    rng = random.Random(8)
    for _ in range(30):
        G = random_bipartite_graph(rng, 24)
        r = verify_theta_free(G, 50)
        expected = max(
            (brute_theta_count(G, u, G.P + v) for u in range(G.P) for v in range(G.L)), default=0
        )
        assert r.passed and r.stats["max_disjoint_paths"] == expected


def test_jobs_do_not_change_result(g23):
    G = g23[1]
    assert verify_theta_free(G, 2, jobs=3).to_text() == verify_theta_free(G, 2).to_text()
    H = complete_bipartite(6, 6)
    assert verify_theta_free(H, 3, jobs=3).to_text() == verify_theta_free(H, 3).to_text()


def test_girth_examples():
    assert girth(even_cycle(3)) == 6
    assert girth(even_cycle(5)) == 10
    assert girth(star_tree()) == math.inf
    assert girth(complete_bipartite(2, 2)) == 4


def test_girth_matches_networkx():
    rng = random.Random(2)
    for _ in range(150):
        G = random_bipartite_graph(rng, 40)
        assert girth(G) == nx.girth(to_nx(G))


def test_girth_norm_graph(g23):
    assert girth(g23[1]) >= 8


def test_t2_freeness_iff_girth_at_least_8():
    rng = random.Random(11)
    hits = {True: 0, False: 0}
    for i in range(300):
        G = random_bipartite_graph(rng, 40, density=0.03 + 0.12 * (i % 10) / 9)
        free = find_c4(G).passed and verify_theta_free(G, 2).passed
        assert free == (girth(G) >= 8)
        assert find_c4(G).passed == (not brute_c4(G))
        hits[free] += 1
    assert hits[True] and hits[False]


def test_replay_rejects_bogus_witnesses():
    G = theta_graph(3)
    fake = VerificationReport("theta(3)", False, {"pair": [0, G.P], "paths": [[0, 4, 1, 5]] * 3})
    assert not replay_witness(G, fake)
    assert not replay_witness(G, VerificationReport("c4", False, {"cycle": [0, 4, 1, 5]}))
    assert not replay_witness(G, VerificationReport("c4", True))


def test_report_text_is_stable():
    r = verify_theta_free(theta_graph(2), 2)
    assert r.to_text() == (
        "check: theta(2)\noutcome: fail\nmax_disjoint_paths: 2\npairs_examined: 1\n"
        "witness.pair: 0 3\nwitness.paths: 0-4-1-3 0-5-2-3\n"
    )


def test_empty_graph():
    G = IncidenceGraph.from_edges(2, 2, [])
    assert find_c4(G).passed and verify_theta_free(G, 2).passed and girth(G) == math.inf
