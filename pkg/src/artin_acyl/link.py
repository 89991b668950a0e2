"""Vertex link of the Brady-McCammond presentation complex.

Lengths are integers in units of pi/12, so pi/4 = 3, pi/3 = 4, pi/2 = 6,
pi = 12 and 2*pi = 24. Every comparison is exact.

Each 1-cell ``c`` contributes two link vertices: ``c-`` (near its start)
and ``c+`` (near its end). A relation ``x = a b`` is a triangle whose three
corners become the link edges

    start   (x-, a-)
    end     (x+, b+)
    middle  (a+, b-)
"""

from __future__ import annotations

import heapq
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidPointError
from .graph import DirectedLabeledGraph
from .presentation import bm_presentation

PI = 12
TWO_PI = 24
INFINITY = math.inf


class Metric(str, Enum):
    ISOSCELES = "isosceles"
    EQUILATERAL = "equilateral"


CORNER_WEIGHTS = {
    Metric.ISOSCELES: {"start": 3, "end": 3, "middle": 6},
    Metric.EQUILATERAL: {"start": 4, "end": 4, "middle": 4},
}


@dataclass(frozen=True)
class LinkEdge:
    a: int
    b: int
    weight: int
    relation: int
    corner: str


@dataclass(frozen=True, order=True)
class LinkPoint:
    """A link vertex ``(gen, sign)`` or a point ``offset`` units along edge ``edge`` from its ``a`` end."""

    gen: str | None = None
    sign: str | None = None
    edge: int | None = None
    offset: int = 0

    @classmethod
    def at(cls, gen: str, sign: str) -> LinkPoint:
        return cls(gen=gen, sign=sign)

    @classmethod
    def on(cls, edge: int, offset: int) -> LinkPoint:
        return cls(edge=edge, offset=offset)

    @property
    def is_vertex(self) -> bool:
        return self.edge is None

    def __str__(self):
        if self.is_vertex:
            return f"{self.gen}{self.sign}"
        return f"e{self.edge}@{self.offset}"


@dataclass(frozen=True, eq=False)
class LinkGraph:
    mode: Metric
    vertices: tuple[tuple[str, str], ...]
    edges: tuple[LinkEdge, ...]
    relations: tuple[tuple[str, str, str], ...]
    _index: dict = field(init=False, repr=False)
    _adj: list = field(init=False, repr=False)

    def __post_init__(self):
        index = {v: i for i, v in enumerate(self.vertices)}
        adj: list[list[tuple[int, int, int]]] = [[] for _ in self.vertices]
        for k, e in enumerate(self.edges):
            adj[e.a].append((e.b, e.weight, k))
            if e.a != e.b:
                adj[e.b].append((e.a, e.weight, k))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", adj)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.vertices), len(self.edges)

    def vertex_id(self, gen: str, sign: str) -> int:
        try:
            return self._index[(gen, sign)]
        except KeyError:
            raise InvalidPointError(f"no link vertex {gen}{sign}") from None

    def point(self, gen: str, sign: str) -> LinkPoint:
        self.vertex_id(gen, sign)
        return LinkPoint.at(gen, sign)

    def corner_edge(self, relation: tuple[str, str, str], corner: str) -> int:
        """Index of the link edge for a corner of the relation ``x = a b``."""
        for k, e in enumerate(self.edges):
            if e.corner == corner and self.relations[e.relation] == relation:
                return k
        raise InvalidPointError(f"no {corner} corner for relation {relation}")

    def midpoint(self, edge: int) -> LinkPoint:
        w = self.edges[edge].weight
        if w % 2:
            raise InvalidPointError(f"edge {edge} has odd length {w}")
        return LinkPoint.on(edge, w // 2)

    def validate(self, p: LinkPoint) -> None:
        if p.is_vertex:
            self.vertex_id(p.gen, p.sign)
            return
        if not 0 <= p.edge < len(self.edges):
            raise InvalidPointError(f"no link edge {p.edge}")
        if not 0 < p.offset < self.edges[p.edge].weight:
            raise InvalidPointError(f"offset {p.offset} not interior to edge {p.edge}")

    def label(self, vid: int) -> LinkPoint:
        g, s = self.vertices[vid]
        return LinkPoint.at(g, s)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "vertices": [{"gen": g, "sign": s} for g, s in self.vertices],
            "edges": [
                {"a": e.a, "b": e.b, "w": e.weight, "origin": {"relation": e.relation, "corner": e.corner}}
                for e in self.edges
            ],
        }


def build_link(dg: DirectedLabeledGraph, mode: Metric | str) -> LinkGraph:
    mode = Metric(mode)
    bm = bm_presentation(dg)
    verts = tuple((g, s) for g in bm.generators for s in ("-", "+"))
    index = {v: i for i, v in enumerate(verts)}
    weights = CORNER_WEIGHTS[mode]
    edges = []
    rels = []
    for k, (left, right) in enumerate(bm.relations):
        (x, _), = left
        (a, _), (b, _) = right
        rels.append((x, a, b))
        for corner, p, q in (
            ("start", (x, "-"), (a, "-")),
            ("end", (x, "+"), (b, "+")),
            ("middle", (a, "+"), (b, "-")),
        ):
            edges.append(LinkEdge(index[p], index[q], weights[corner], k, corner))
    return LinkGraph(mode, verts, tuple(edges), tuple(rels))


# --------------------------------------------------------------------------
# distances


class _Augmented:
    """The link with interior points spliced in as extra nodes."""

    def __init__(self, L: LinkGraph, points: Iterable[LinkPoint]):
        self.L = L
        self.node: dict[LinkPoint, int] = {}
        self.labels: list[LinkPoint] = []
        cuts: dict[int, set[int]] = {}
        for p in points:
            L.validate(p)
            if not p.is_vertex:
                cuts.setdefault(p.edge, set()).add(p.offset)
        n = len(L.vertices)
        extra: dict[tuple[int, int], int] = {}
        for k in sorted(cuts):
            for off in sorted(cuts[k]):
                extra[(k, off)] = n + len(extra)
        self.adj: list[list[tuple[int, int, int]]] = [list(a) for a in L._adj]
        self.adj.extend([] for _ in extra)
        for k, offs in cuts.items():
            e = L.edges[k]
            self.adj[e.a] = [t for t in self.adj[e.a] if t[2] != k]
            self.adj[e.b] = [t for t in self.adj[e.b] if t[2] != k]
            chain = [(e.a, 0)] + [(extra[(k, o)], o) for o in sorted(offs)] + [(e.b, e.weight)]
            for (u, ou), (v, ov) in zip(chain, chain[1:]):
                self.adj[u].append((v, ov - ou, k))
                self.adj[v].append((u, ov - ou, k))
        for p in points:
            self.node[p] = L.vertex_id(p.gen, p.sign) if p.is_vertex else extra[(p.edge, p.offset)]
        self.point_of = {i: L.label(i) for i in range(n)}
        for (k, off), i in extra.items():
            self.point_of[i] = LinkPoint.on(k, off)

    def dijkstra(self, src: int) -> list[float]:
        dist = [INFINITY] * len(self.adj)
        dist[src] = 0
        heap = [(0, src)]
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            for v, w, _ in self.adj[u]:
                nd = d + w
                if nd < dist[v]:
                    dist[v] = nd
                    heapq.heappush(heap, (nd, v))
        return dist


def link_distance(L: LinkGraph, p: LinkPoint, q: LinkPoint) -> int | float:
    """Exact distance in angle units; ``INFINITY`` when ``q`` is unreachable."""
    aug = _Augmented(L, (p, q))
    return aug.dijkstra(aug.node[p])[aug.node[q]]


def distances_from(L: LinkGraph, p: LinkPoint) -> dict[LinkPoint, int | float]:
    """Distances from ``p`` to every link vertex."""
    aug = _Augmented(L, (p,))
    dist = aug.dijkstra(aug.node[p])
    return {L.label(i): dist[i] for i in range(len(L.vertices))}


@dataclass(frozen=True)
class Geodesic:
    points: tuple[LinkPoint, ...]
    edges: tuple[int, ...]

    @property
    def length_edges(self) -> int:
        return len(self.edges)


def geodesics_between(L: LinkGraph, p: LinkPoint, q: LinkPoint) -> list[Geodesic]:
    """All shortest paths from ``p`` to ``q``.

    Parallel link edges give distinct geodesics even when the vertex
    sequence is the same.
    """
    aug = _Augmented(L, (p, q))
    src, dst = aug.node[p], aug.node[q]
    dist = aug.dijkstra(src)
    if dist[dst] == INFINITY:
        return []
    out: list[Geodesic] = []

    def back(v: int, nodes: list[int], steps: list[int]):
        if v == src:
            pts = tuple(aug.point_of[i] for i in reversed(nodes))
            out.append(Geodesic(pts, tuple(reversed(steps))))
            return
        seen = set()
        for u, w, k in aug.adj[v]:
            if dist[u] + w == dist[v] and (u, k) not in seen:
                seen.add((u, k))
                back(u, nodes + [u], steps + [k])

    back(dst, [dst], [])
    # pieces of one subdivided edge carry the same edge index
    out = [Geodesic(g.points, _squash(g.edges)) for g in out]
    out.sort(key=lambda g: (tuple(map(str, g.points)), g.edges))
    return out


def _squash(steps: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for k in steps:
        if not out or out[-1] != k:
            out.append(k)
    return tuple(out)


def systole(L: LinkGraph) -> int | float:
    """Length of the shortest non-trivial closed loop.

    For each edge ``uv`` of weight ``w`` the shortest cycle through it is
    ``w`` plus the ``u``-``v`` distance avoiding that edge. Searches are cut
    off at the best cycle found so far.
    """
    best = INFINITY
    adj = L._adj
    for k, e in enumerate(L.edges):
        if e.weight >= best:
            continue
        if e.a == e.b:
            best = e.weight
            continue
        limit = best - e.weight
        dist = {e.a: 0}
        heap = [(0, e.a)]
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            if u == e.b:
                best = d + e.weight
                break
            for v, w, j in adj[u]:
                if j == k:
                    continue
                nd = d + w
                if nd < limit and nd < dist.get(v, INFINITY):
                    dist[v] = nd
                    heapq.heappush(heap, (nd, v))
    return best


def check_link_condition(L: LinkGraph) -> bool:
    return systole(L) >= TWO_PI
