"""Graph corpora for sweeps: exhaustive (up to isomorphism) and seeded random."""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator, Sequence
from functools import lru_cache

from networkx.generators.atlas import graph_atlas_g

from .graph import DirectedLabeledGraph, LabeledGraph, four_cycles, is_almost_large_type, triangles


def names(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


@lru_cache(maxsize=None)
def graph_shapes(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Edge lists of all simple graphs on ``n`` vertices, one per isomorphism class."""
    if n > 7:
        raise ValueError("atlas covers at most 7 vertices")
    out = []
    for G in graph_atlas_g():
        if G.number_of_nodes() == n:
            out.append(tuple(sorted(tuple(sorted(e)) for e in G.edges())))
    return tuple(out)


def automorphisms(n: int, edges: Sequence[tuple[int, int]]) -> list[tuple[int, ...]]:
    es = {frozenset(e) for e in edges}
    return [
        p for p in itertools.permutations(range(n))
        if all(frozenset((p[a], p[b])) in es for a, b in edges)
    ]


def _edge_orbit_reps(n, edges, choices: Sequence[Sequence]) -> list[tuple]:
    """One assignment per orbit of the automorphism group acting on per-edge values."""
    pos = {frozenset(e): i for i, e in enumerate(edges)}
    auts = automorphisms(n, edges)
    perms = [[pos[frozenset((p[a], p[b]))] for a, b in edges] for p in auts]
    reps = []
    seen = set()
    for vals in itertools.product(*choices):
        if vals in seen:
            continue
        orbit = set()
        for perm in perms:
            img = [None] * len(vals)
            for i, j in enumerate(perm):
                img[j] = vals[i]
            orbit.add(tuple(img))
        seen |= orbit
        reps.append(vals)
    return reps


def _triangle_free_shape(n, edges) -> bool:
    es = {frozenset(e) for e in edges}
    return not any(
        {frozenset((a, b)), frozenset((b, c)), frozenset((a, c))} <= es
        for a, b, c in itertools.combinations(range(n), 3)
    )


def triangle_free_sweep(min_n: int = 3, max_n: int = 6, labels: Sequence[int] = (2, 3)) -> Iterator[LabeledGraph]:
    """All triangle-free labeled graphs up to labeled-graph isomorphism."""
    for n in range(min_n, max_n + 1):
        vs = names(n)
        for edges in graph_shapes(n):
            if not _triangle_free_shape(n, edges):
                continue
            for labs in _edge_orbit_reps(n, edges, [labels] * len(edges)):
                yield LabeledGraph.from_edges(vs, ((vs[a], vs[b], m) for (a, b), m in zip(edges, labs)))


def almost_large_sweep(min_n: int = 3, max_n: int = 5, labels: Sequence[int] = (2, 3, 4)) -> Iterator[LabeledGraph]:
    """All almost-large-type labeled graphs up to isomorphism."""
    big = [m for m in labels if m > 2]
    for n in range(min_n, max_n + 1):
        vs = names(n)
        for edges in graph_shapes(n):
            g0 = LabeledGraph.from_edges(vs, ((vs[a], vs[b], 3) for a, b in edges))
            in_triangle = {frozenset(p) for t in triangles(g0) for p in itertools.combinations(t, 2)}
            choices = [big if frozenset((vs[a], vs[b])) in in_triangle else labels for a, b in edges]
            for labs in _edge_orbit_reps(n, edges, choices):
                g = LabeledGraph.from_edges(vs, ((vs[a], vs[b], m) for (a, b), m in zip(edges, labs)))
                if is_almost_large_type(g):
                    yield g


def all_orientations(g: LabeledGraph) -> Iterator[DirectedLabeledGraph]:
    edges = list(g.edges)
    for flips in itertools.product((False, True), repeat=len(edges)):
        yield DirectedLabeledGraph(g, {e.key: ((e.v, e.u) if f else (e.u, e.v)) for e, f in zip(edges, flips)})


def cycle_edge_keys(g: LabeledGraph) -> set[str]:
    keys = set()
    for cyc in [*triangles(g), *four_cycles(g)]:
        for i in range(len(cyc)):
            keys.add(g.edge_key(cyc[i], cyc[(i + 1) % len(cyc)]))
    return keys


# --------------------------------------------------------------------------
# random families


def random_gamma_mn_graph(
    rng: random.Random, m: int, n: int, extra: int | None = None
) -> tuple[LabeledGraph, DirectedLabeledGraph, tuple[str, str, str]]:
    """A triangle-free graph with ``v1 -> v2 -> v3`` as a full directed subgraph.

    Extra vertices attach with random labels; no edge ever closes a
    triangle or joins ``v1`` to ``v3``. Other edges get random directions.
    """
    if extra is None:
        extra = rng.randint(0, 4)
    vs = ["v1", "v2", "v3", *(f"w{i}" for i in range(extra))]
    labels = {frozenset(("v1", "v2")): m, frozenset(("v2", "v3")): n}
    adj = {v: set() for v in vs}
    adj["v1"].add("v2"), adj["v2"].update(("v1", "v3")), adj["v3"].add("v2")
    candidates = [p for p in itertools.combinations(vs, 2) if frozenset(p) not in labels]
    rng.shuffle(candidates)
    for a, b in candidates:
        if {a, b} == {"v1", "v3"} or adj[a] & adj[b] or rng.random() < 0.4:
            continue
        labels[frozenset((a, b))] = rng.choice((2, 2, 3, 4))
        adj[a].add(b)
        adj[b].add(a)
    g = LabeledGraph.from_edges(vs, ((*sorted(k, key=vs.index), m_) for k, m_ in labels.items()))
    pairs = [("v1", "v2"), ("v2", "v3")]
    for e in g.edges:
        if frozenset((e.u, e.v)) not in (frozenset(pairs[0]), frozenset(pairs[1])):
            pairs.append((e.u, e.v) if rng.random() < 0.5 else (e.v, e.u))
    return g, DirectedLabeledGraph.from_pairs(g, pairs), ("v1", "v2", "v3")


def _random_forest_edges(rng: random.Random, vs: Sequence[str]) -> list[tuple[str, str]]:
    edges = []
    for i in range(1, len(vs)):
        if rng.random() < 0.75:
            edges.append((vs[rng.randrange(i)], vs[i]))
    return edges


def random_square_free_bipartite(rng: random.Random, size: int) -> tuple[list[str], list[tuple[str, str]]]:
    """Square-free bipartite graph: a random forest, sometimes with a long even cycle."""
    vs = [f"b{i}" for i in range(size)]
    if size >= 6 and rng.random() < 0.4:
        k = 6 if size < 8 else rng.choice((6, 8))
        cyc = vs[:k]
        edges = [(cyc[i], cyc[(i + 1) % k]) for i in range(k)]
        for i in range(k, size):
            if rng.random() < 0.6:
                edges.append((vs[rng.randrange(i)], vs[i]))
        return vs, edges
    return vs, _random_forest_edges(rng, vs)


def random_cor13_cone(rng: random.Random) -> tuple[LabeledGraph, str]:
    """Cone over a square-free bipartite graph with the required labels above 2."""
    while True:
        size = rng.randint(2, 8)
        base_vs, base_edges = random_square_free_bipartite(rng, size)
        if base_edges:
            break
    touched = {v for e in base_edges for v in e}
    apex = "apex"
    es = [(u, v, rng.choice((3, 4, 5))) for u, v in base_edges]
    for v in base_vs:
        es.append((apex, v, rng.choice((3, 4, 5)) if v in touched else rng.choice((2, 3))))
    order = [apex, *base_vs]
    rng.shuffle(order)
    return LabeledGraph.from_edges(order, es), apex


def random_square_free_almost_large(rng: random.Random, n: int | None = None) -> LabeledGraph:
    """Random graph with no 4-cycle and at least one triangle; triangle edges labeled above 2."""
    while True:
        n = n or rng.randint(4, 9)
        vs = names(n)
        adj = {v: set() for v in vs}
        edges: list[tuple[str, str]] = []
        pairs = list(itertools.combinations(vs, 2))
        rng.shuffle(pairs)
        for a, b in pairs:
            if rng.random() < 0.5:
                continue
            adj[a].add(b), adj[b].add(a)
            g = LabeledGraph.from_edges(vs, ((u, v, 3) for u, v in edges + [(a, b)]))
            if four_cycles(g):
                adj[a].discard(b), adj[b].discard(a)
                continue
            edges.append((a, b))
        g0 = LabeledGraph.from_edges(vs, ((u, v, 3) for u, v in edges))
        tris = triangles(g0)
        if not tris:
            continue
        in_tri = {frozenset(p) for t in tris for p in itertools.combinations(t, 2)}
        es = [
            (u, v, rng.choice((3, 4)) if frozenset((u, v)) in in_tri else rng.choice((2, 3, 4)))
            for u, v in edges
        ]
        return LabeledGraph.from_edges(vs, es)
