import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from theta_forge.construct import PointSet
from theta_forge.gf import make_field
from theta_forge.linrep import IncidenceGraph
from theta_forge.oracle import (
    OracleConfig,
    brute_c4,
    brute_secant_audit,
    brute_theta_count,
    random_corpus,
    three_paths,
)
from theta_forge.projgeom import ProjectivePoint
from theta_forge.verify import find_c4, max_disjoint_3paths

from helpers import complete_bipartite, even_cycle, path_graph


def test_brute_theta_examples():
    assert brute_theta_count(complete_bipartite(3, 3), 0, 3) == 2
    G = path_graph()
    assert brute_theta_count(G, 0, G.P + 1) == 1
    assert three_paths(G, 0, G.P + 1) == [(0, 3, 1, 4)]


def test_brute_c4_examples():
    assert brute_c4(complete_bipartite(2, 2))
    assert not brute_c4(even_cycle(4))


def test_caps_enforced(g23):
    with pytest.raises(ValueError):
        brute_c4(g23[1])
    with pytest.raises(ValueError):
        brute_theta_count(g23[1], 0, 81)
    with pytest.raises(ValueError):
        brute_secant_audit(g23[0], OracleConfig(max_ambient_points=39))


def test_secant_oracle_examples(g23):
    assert brute_secant_audit(g23[0]) == 2
    F = make_field(3)
    S = PointSet(2, F, tuple(ProjectivePoint(c) for c in [(1, 0, 0), (0, 1, 0), (1, 1, 0)]))
    assert brute_secant_audit(S) == 3
    with pytest.raises(ValueError):
        brute_secant_audit(PointSet(3, make_field(4), ()))


def test_corpus_is_seeded():
    a = random_corpus(OracleConfig(trial_count=20, seed=4))
    b = random_corpus(OracleConfig(trial_count=20, seed=4))
    assert a == b
    assert all(G.P + G.L <= 60 for G in a)


@st.composite
def bipartite_graphs(draw):
    P = draw(st.integers(1, 8))
    L = draw(st.integers(1, 8))
    edges = draw(st.sets(st.tuples(st.integers(0, P - 1), st.integers(0, L - 1))))
    return IncidenceGraph.from_edges(P, L, edges)


@given(bipartite_graphs())
@settings(max_examples=300, deadline=None)
def test_matching_equals_brute_force(G):
    for u in range(G.P):
        for v in range(G.L):
            assert max_disjoint_3paths(G, u, G.P + v) == brute_theta_count(G, u, G.P + v)
    assert find_c4(G).passed == (not brute_c4(G))
