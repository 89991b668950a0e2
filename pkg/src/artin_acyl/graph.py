"""Labeled defining graphs and the graph-theoretic searches used by the classifier.

Vertices keep the order in which they were declared; that order is the
canonical total order behind every "first in lexicographic order" choice
below, so the same input always yields the same witness.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum

from .errors import GraphError

__all__ = [
    "Edge",
    "LabeledGraph",
    "DirectedLabeledGraph",
    "WitnessKind",
    "SubgraphWitness",
    "parse_graph",
    "graph_to_dict",
    "dump_graph",
    "is_triangle_free",
    "is_almost_large_type",
    "join_decompose",
    "is_complete_bipartite_all2",
    "is_cone_over_isolated_all2",
    "find_full_2path_big_label",
    "find_full_3path_all2",
    "find_triangle",
    "connected_components",
    "is_square_free",
    "is_bipartite",
    "triangles",
    "four_cycles",
]


@dataclass(frozen=True)
class Edge:
    """Undirected edge; ``u`` precedes ``v`` in the graph's vertex order."""

    u: str
    v: str
    label: int

    @property
    def key(self) -> str:
        return f"{self.u}--{self.v}"


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    _index: dict[str, int] = field(init=False, repr=False)
    _adj: dict[str, dict[str, int]] = field(init=False, repr=False)

    def __post_init__(self):
        index: dict[str, int] = {}
        for i, v in enumerate(self.vertices):
            if not isinstance(v, str) or not v:
                raise GraphError("vertex names must be non-empty strings", f"vertices[{i}]")
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}", f"vertices[{i}]")
            index[v] = i
        adj: dict[str, dict[str, int]] = {v: {} for v in self.vertices}
        normalized = []
        for i, e in enumerate(self.edges):
            where = f"edges[{i}]"
            for end in (e.u, e.v):
                if end not in index:
                    raise GraphError(f"unknown endpoint {end!r}", where)
            if e.u == e.v:
                raise GraphError(f"self-loop at {e.u!r}", where)
            if isinstance(e.label, bool) or not isinstance(e.label, int):
                raise GraphError("label must be an integer", where)
            if e.label < 2:
                raise GraphError(f"label below 2 ({e.label})", where)
            if e.v in adj[e.u]:
                raise GraphError(f"duplicate edge {e.u!r}-{e.v!r}", where)
            adj[e.u][e.v] = e.label
            adj[e.v][e.u] = e.label
            u, v = (e.u, e.v) if index[e.u] < index[e.v] else (e.v, e.u)
            normalized.append(Edge(u, v, e.label))
        normalized.sort(key=lambda e: (index[e.u], index[e.v]))
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", adj)

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, int]]) -> LabeledGraph:
        return cls(tuple(vertices), tuple(Edge(u, v, m) for u, v, m in edges))

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __len__(self):
        return len(self.vertices)

    def index(self, v: str) -> int:
        return self._index[v]

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def label(self, u: str, v: str) -> int:
        return self._adj[u][v]

    def neighbors(self, v: str) -> list[str]:
        """Neighbors of ``v`` in canonical order."""
        return sorted(self._adj[v], key=self._index.__getitem__)

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def edge(self, u: str, v: str) -> Edge:
        if self._index[u] > self._index[v]:
            u, v = v, u
        return Edge(u, v, self._adj[u][v])

    def edge_key(self, u: str, v: str) -> str:
        return self.edge(u, v).key

    def ordered(self, vs: Iterable[str]) -> list[str]:
        return sorted(vs, key=self._index.__getitem__)

    def induced(self, vs: Iterable[str]) -> LabeledGraph:
        keep = set(vs)
        verts = tuple(v for v in self.vertices if v in keep)
        return LabeledGraph(verts, tuple(e for e in self.edges if e.u in keep and e.v in keep))


@dataclass(frozen=True, eq=False)
class DirectedLabeledGraph:
    """A labeled graph together with a direction ``(s_e, t_e)`` for every edge."""

    base: LabeledGraph
    orientation: Mapping[str, tuple[str, str]]

    def __post_init__(self):
        for e in self.base.edges:
            st = self.orientation.get(e.key)
            if st is None:
                raise GraphError("edge has no orientation", e.key)
            if set(st) != {e.u, e.v} or len(st) != 2:
                raise GraphError(f"orientation {st!r} is not a permutation of the endpoints", e.key)
        extra = set(self.orientation) - {e.key for e in self.base.edges}
        if extra:
            raise GraphError("orientation given for a non-edge", sorted(extra)[0])
        object.__setattr__(self, "orientation", dict(self.orientation))

    @classmethod
    def lexicographic(cls, g: LabeledGraph) -> DirectedLabeledGraph:
        return cls(g, {e.key: (e.u, e.v) for e in g.edges})

    @classmethod
    def from_pairs(cls, g: LabeledGraph, pairs: Iterable[tuple[str, str]]) -> DirectedLabeledGraph:
        """Orientation from explicit ``(source, target)`` pairs; unlisted edges go lexicographically."""
        orient = {e.key: (e.u, e.v) for e in g.edges}
        for s, t in pairs:
            orient[g.edge_key(s, t)] = (s, t)
        return cls(g, orient)

    def __eq__(self, other):
        if not isinstance(other, DirectedLabeledGraph):
            return NotImplemented
        return self.base == other.base and self.orientation == other.orientation

    def __hash__(self):
        return hash((self.base, tuple(sorted(self.orientation.items()))))

    def direction(self, u: str, v: str) -> tuple[str, str]:
        return self.orientation[self.base.edge_key(u, v)]

    def goes(self, u: str, v: str) -> bool:
        """True when the edge between ``u`` and ``v`` is directed ``u -> v``."""
        return self.direction(u, v) == (u, v)

    def directed_edges(self) -> Iterator[tuple[Edge, str, str]]:
        for e in self.base.edges:
            s, t = self.orientation[e.key]
            yield e, s, t


class WitnessKind(str, Enum):
    TWO_PATH_BIG_LABEL = "TwoPathBigLabel"
    THREE_PATH_ALL2 = "ThreePathAll2"
    TRIANGLE = "Triangle"
    FULL_SUBGRAPH = "FullSubgraph"


@dataclass(frozen=True)
class SubgraphWitness:
    kind: WitnessKind
    vertices: tuple[str, ...]
    labels: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "vertices": list(self.vertices), "labels": list(self.labels)}

    @classmethod
    def from_dict(cls, d: Mapping) -> SubgraphWitness:
        return cls(WitnessKind(d["kind"]), tuple(d["vertices"]), tuple(d["labels"]))


# --------------------------------------------------------------------------
# JSON


def parse_graph(text: str) -> LabeledGraph | DirectedLabeledGraph:
    """Parse the JSON graph schema.

    The directed variant is returned only when every edge carries
    ``"directed": true``; a graph with no edges is always undirected.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from exc
    return graph_from_dict(doc)


def graph_from_dict(doc) -> LabeledGraph | DirectedLabeledGraph:
    if not isinstance(doc, dict):
        raise GraphError("top level must be an object", "document")
    verts = doc.get("vertices")
    if not isinstance(verts, list):
        raise GraphError("missing or non-list 'vertices'", "vertices")
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphError("'edges' must be a list", "edges")
    edges = []
    flags = []
    for i, e in enumerate(raw_edges):
        where = f"edges[{i}]"
        if not isinstance(e, dict):
            raise GraphError("edge must be an object", where)
        for k in ("source", "target", "label"):
            if k not in e:
                raise GraphError(f"missing {k!r}", where)
        edges.append(Edge(e["source"], e["target"], e["label"]))
        directed = e.get("directed", False)
        if not isinstance(directed, bool):
            raise GraphError("'directed' must be a boolean", where)
        flags.append(directed)
    g = LabeledGraph(tuple(verts), tuple(edges))
    if edges and all(flags):
        return DirectedLabeledGraph.from_pairs(g, ((e.u, e.v) for e in edges))
    return g


def graph_to_dict(g: LabeledGraph | DirectedLabeledGraph) -> dict:
    if isinstance(g, DirectedLabeledGraph):
        edges = [
            {"source": s, "target": t, "label": e.label, "directed": True}
            for e, s, t in g.directed_edges()
        ]
        return {"vertices": list(g.base.vertices), "edges": edges}
    return {
        "vertices": list(g.vertices),
        "edges": [{"source": e.u, "target": e.v, "label": e.label} for e in g.edges],
    }


def dump_graph(g: LabeledGraph | DirectedLabeledGraph) -> str:
    return json.dumps(graph_to_dict(g), sort_keys=True, indent=2)


# --------------------------------------------------------------------------
# cycles


def triangles(g: LabeledGraph) -> list[tuple[str, str, str]]:
    """All 3-cycles as increasing vertex triples, in lexicographic order."""
    out = []
    for a in g.vertices:
        ia = g.index(a)
        later = [b for b in g.neighbors(a) if g.index(b) > ia]
        for b, c in itertools.combinations(later, 2):
            if g.has_edge(b, c):
                out.append((a, b, c))
    return out


def four_cycles(g: LabeledGraph) -> list[tuple[str, str, str, str]]:
    """All 4-cycles ``a-b-c-d-a`` (not necessarily induced).

    Each cycle is listed once: ``a`` is its least vertex and ``b`` precedes ``d``.
    """
    out = []
    for a in g.vertices:
        ia = g.index(a)
        later = [b for b in g.neighbors(a) if g.index(b) > ia]
        for b, d in itertools.combinations(later, 2):
            for c in g.neighbors(b):
                if c != a and g.index(c) > ia and c != d and g.has_edge(c, d):
                    out.append((a, b, c, d))
    return out


def _cycle_labels(g: LabeledGraph, cyc: Sequence[str]) -> tuple[int, ...]:
    return tuple(g.label(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def is_triangle_free(g: LabeledGraph) -> bool:
    return find_triangle(g) is None


def find_triangle(g: LabeledGraph) -> SubgraphWitness | None:
    for tri in triangles(g):
        return SubgraphWitness(WitnessKind.TRIANGLE, tri, _cycle_labels(g, tri))
    return None


def is_square_free(g: LabeledGraph) -> bool:
    return not four_cycles(g)


def almost_large_violation(g: LabeledGraph) -> tuple[tuple[str, ...], str] | None:
    """First cycle breaking the almost-large-type conditions, with a reason."""
    for tri in triangles(g):
        if min(_cycle_labels(g, tri)) <= 2:
            return tri, "3-cycle with an edge labeled 2"
    for sq in four_cycles(g):
        if sum(m > 2 for m in _cycle_labels(g, sq)) < 2:
            return sq, "4-cycle with fewer than two edges labeled above 2"
    return None


def is_almost_large_type(g: LabeledGraph) -> bool:
    return almost_large_violation(g) is None


# --------------------------------------------------------------------------
# components, colorings, joins


def connected_components(g: LabeledGraph) -> list[tuple[str, ...]]:
    seen: set[str] = set()
    comps = []
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(tuple(g.ordered(comp)))
    return comps


def is_bipartite(g: LabeledGraph) -> dict[str, int] | None:
    """A proper 2-coloring (0 = white, 1 = black), or None.

    The first vertex of each component is colored white.
    """
    color: dict[str, int] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        for u in queue:
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def join_decompose(g: LabeledGraph) -> tuple[tuple[str, ...], tuple[str, ...]] | None:
    """Split ``g`` as a join whose cross edges are all labeled 2.

    Two vertices must sit on the same side unless they are joined by a
    label-2 edge, so the sides are unions of the connected components of
    that "must stay together" relation. The first side returned is the
    component holding the first vertex.
    """
    verts = g.vertices
    if len(verts) < 2:
        return None
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, w in itertools.combinations(verts, 2):
        if not (g.has_edge(u, w) and g.label(u, w) == 2):
            parent[find(u)] = find(w)
    first = find(verts[0])
    side1 = tuple(v for v in verts if find(v) == first)
    if len(side1) == len(verts):
        return None
    side2 = tuple(v for v in verts if find(v) != first)
    return side1, side2


def is_complete_bipartite_all2(g: LabeledGraph) -> tuple[tuple[str, ...], tuple[str, ...]] | None:
    if len(g) < 2 or any(e.label != 2 for e in g.edges):
        return None
    if len(connected_components(g)) != 1:
        return None
    coloring = is_bipartite(g)
    if coloring is None:
        return None
    white = tuple(v for v in g.vertices if coloring[v] == 0)
    black = tuple(v for v in g.vertices if coloring[v] == 1)
    if len(g.edges) != len(white) * len(black):
        return None
    return white, black


def is_cone_over_isolated_all2(g: LabeledGraph) -> str | None:
    """Apex of an all-2 star, if ``g`` is one."""
    n = len(g)
    if n < 2 or len(g.edges) != n - 1 or any(e.label != 2 for e in g.edges):
        return None
    for v in g.vertices:
        if g.degree(v) == n - 1:
            return v
    return None


# --------------------------------------------------------------------------
# full (induced) path searches


def find_full_2path_big_label(g: LabeledGraph) -> SubgraphWitness | None:
    """First induced path ``v1-v2-v3`` with labels ``(m, n)``, ``n >= 3`` and ``n >= m``.

    Requiring ``n >= m`` puts the larger label second, so when only one
    label exceeds 2 it is the second edge.
    """
    for v1 in g.vertices:
        for v2 in g.neighbors(v1):
            m = g.label(v1, v2)
            for v3 in g.neighbors(v2):
                if v3 == v1 or g.has_edge(v1, v3):
                    continue
                n = g.label(v2, v3)
                if n >= 3 and n >= m:
                    return SubgraphWitness(WitnessKind.TWO_PATH_BIG_LABEL, (v1, v2, v3), (m, n))
    return None


def find_full_3path_all2(g: LabeledGraph) -> SubgraphWitness | None:
    for v1 in g.vertices:
        for v2 in g.neighbors(v1):
            if g.label(v1, v2) != 2:
                continue
            for v3 in g.neighbors(v2):
                if v3 == v1 or g.label(v2, v3) != 2 or g.has_edge(v1, v3):
                    continue
                for v4 in g.neighbors(v3):
                    if v4 in (v1, v2) or g.label(v3, v4) != 2:
                        continue
                    if g.has_edge(v1, v4) or g.has_edge(v2, v4):
                        continue
                    return SubgraphWitness(WitnessKind.THREE_PATH_ALL2, (v1, v2, v3, v4), (2, 2, 2))
    return None


def is_full_path(g: LabeledGraph, path: Sequence[str]) -> bool:
    """True when ``path`` spans exactly its consecutive edges in ``g``."""
    if len(set(path)) != len(path):
        return False
    for i, j in itertools.combinations(range(len(path)), 2):
        if g.has_edge(path[i], path[j]) != (j == i + 1):
            return False
    return True
