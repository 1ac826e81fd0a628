"""Small named graphs for the verifier tests."""
import itertools

import networkx as nx

from theta_forge.linrep import IncidenceGraph


def complete_bipartite(a, b):
    return IncidenceGraph.from_edges(a, b, itertools.product(range(a), range(b)))


def theta_graph(t):
    """Hubs: point 0 and line 0; path i is point0 - line i - point i - line0."""
    edges = []
    for i in range(1, t + 1):
        edges += [(0, i), (i, i), (i, 0)]
    return IncidenceGraph.from_edges(t + 1, t + 1, edges)


def even_cycle(k):
    """C_{2k}: point i ~ line i and line i-1."""
    edges = [(i, i) for i in range(k)] + [(i, (i - 1) % k) for i in range(k)]
    return IncidenceGraph.from_edges(k, k, edges)


def path_graph():
    """u - a - b - v plus isolated vertices on both sides."""
    # points: u=0, b=1, 2 isolated; lines: a=0, v=1, 2 isolated
    return IncidenceGraph.from_edges(3, 3, [(0, 0), (1, 0), (1, 1)])


def star_tree():
    return IncidenceGraph.from_edges(4, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (3, 2), (2, 2)])


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.P + G.L))
    for p, l in G.edges():
        H.add_edge(p, G.P + l)
    return H
