import random

import networkx as nx

from artin_acyl.certificate import certify_gamma_mn, verify_certificate
from artin_acyl.corpus import (
    almost_large_sweep,
    automorphisms,
    graph_shapes,
    random_cor13_cone,
    random_gamma_mn_graph,
    random_square_free_almost_large,
    triangle_free_sweep,
)
from artin_acyl.graph import (
    SubgraphWitness,
    WitnessKind,
    is_almost_large_type,
    is_full_path,
    is_square_free,
    is_triangle_free,
)
from artin_acyl.link import Metric, build_link
from artin_acyl.orientation import cor13_violation


def test_shape_counts_match_known_sequence():
    # simple graphs up to isomorphism on 1..6 vertices
    assert [len(graph_shapes(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_automorphisms_of_path():
    assert len(automorphisms(3, [(0, 1), (1, 2)])) == 2
    assert len(automorphisms(4, [(0, 1), (1, 2), (2, 3), (0, 3)])) == 8


def _nx(g):
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from((e.u, e.v, {"m": e.label}) for e in g.edges)
    return G


def test_sweep_has_no_isomorphic_duplicates():
    gs = list(triangle_free_sweep(3, 4))
    em = nx.algorithms.isomorphism.numerical_edge_match("m", 0)
    for i, a in enumerate(gs):
        for b in gs[i + 1:]:
            if len(a) == len(b) and len(a.edges) == len(b.edges):
                assert not nx.is_isomorphic(_nx(a), _nx(b), edge_match=em)


def test_sweep_is_complete_for_four_vertices():
    # brute force: every labeled triangle-free graph on 4 vertices is isomorphic to one listed
    import itertools

    from artin_acyl.graph import LabeledGraph

    reps = [_nx(g) for g in triangle_free_sweep(4, 4)]
    em = nx.algorithms.isomorphism.numerical_edge_match("m", 0)
    vs = ["v0", "v1", "v2", "v3"]
    pairs = list(itertools.combinations(vs, 2))
    for mask in itertools.product((0, 2, 3), repeat=len(pairs)):
        g = LabeledGraph.from_edges(vs, [(u, v, m) for (u, v), m in zip(pairs, mask) if m])
        if is_triangle_free(g):
            assert any(nx.is_isomorphic(_nx(g), r, edge_match=em) for r in reps)


def test_almost_large_sweep_members():
    for g in almost_large_sweep(3, 4):
        assert is_almost_large_type(g)


def test_random_gamma_mn():
    rng = random.Random(7)
    for _ in range(20):
        g, dg, vs = random_gamma_mn_graph(rng, rng.randint(2, 5), rng.randint(3, 5))
        assert is_triangle_free(g) and is_full_path(g, vs)
        w = SubgraphWitness(WitnessKind.TWO_PATH_BIG_LABEL, vs, ())
        assert verify_certificate(certify_gamma_mn(g, w, dg), build_link(dg, Metric.ISOSCELES))


def test_random_cones_and_square_free():
    rng = random.Random(11)
    for _ in range(20):
        g, apex = random_cor13_cone(rng)
        assert cor13_violation(g, apex) is None
        h = random_square_free_almost_large(rng)
        assert is_square_free(h) and is_almost_large_type(h) and not is_triangle_free(h)
