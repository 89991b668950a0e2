"""Rank-one witnesses together with the link inequalities that certify them.

A certificate names a word in the BM generators and a list of assertions
about distances in the vertex link. The assertions are what makes the
word's axis a local geodesic at the vertex and rule out a flat half plane
along it; they are re-checked from scratch by :func:`verify_certificate`.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum

from .errors import CertificateError, CertificateMismatch, InvalidPointError, PreconditionError
from .graph import (
    DirectedLabeledGraph,
    LabeledGraph,
    SubgraphWitness,
    WitnessKind,
    graph_from_dict,
    graph_to_dict,
    is_full_path,
    is_triangle_free,
)
from .link import (
    PI,
    LinkGraph,
    LinkPoint,
    Metric,
    build_link,
    geodesics_between,
    link_distance,
)
from .orientation import validate_orientation
from .presentation import (
    Word,
    alpha_name,
    expand_to_standard,
    format_word,
    word_from_json,
    word_to_json,
    x_name,
)


class CertificateMode(str, Enum):
    ISOSCELES_MN = "IsoscelesMN"
    ISOSCELES_222 = "Isosceles222"
    EQUILATERAL_TRIANGLE = "EquilateralTriangle"

    @property
    def metric(self) -> Metric:
        if self is CertificateMode.EQUILATERAL_TRIANGLE:
            return Metric.EQUILATERAL
        return Metric.ISOSCELES


# --------------------------------------------------------------------------
# assertions


@dataclass(frozen=True)
class DistanceAtLeast:
    p: LinkPoint
    q: LinkPoint
    bound: int

    def holds(self, L: LinkGraph) -> bool:
        return link_distance(L, self.p, self.q) >= self.bound

    def points(self):
        return (self.p, self.q)

    def describe(self) -> str:
        return f"d({self.p}, {self.q}) >= {self.bound}"


@dataclass(frozen=True)
class DistanceEquals:
    p: LinkPoint
    q: LinkPoint
    value: int

    def holds(self, L: LinkGraph) -> bool:
        return link_distance(L, self.p, self.q) == self.value

    def points(self):
        return (self.p, self.q)

    def describe(self) -> str:
        return f"d({self.p}, {self.q}) == {self.value}"


@dataclass(frozen=True)
class UniqueGeodesic:
    p: LinkPoint
    q: LinkPoint
    path: tuple[LinkPoint, ...]

    def holds(self, L: LinkGraph) -> bool:
        geos = geodesics_between(L, self.p, self.q)
        return len(geos) == 1 and geos[0].points == self.path

    def points(self):
        return (self.p, self.q, *self.path)

    def describe(self) -> str:
        return f"unique geodesic {' - '.join(map(str, self.path))}"


@dataclass(frozen=True)
class NoPiPathThrough:
    """Every path from ``p`` to ``q`` through ``mid`` is longer than pi."""

    p: LinkPoint
    mid: LinkPoint
    q: LinkPoint

    def holds(self, L: LinkGraph) -> bool:
        return link_distance(L, self.p, self.mid) + link_distance(L, self.mid, self.q) > PI

    def points(self):
        return (self.p, self.mid, self.q)

    def describe(self) -> str:
        return f"no path of length pi from {self.p} to {self.q} through {self.mid}"


Assertion = DistanceAtLeast | DistanceEquals | UniqueGeodesic | NoPiPathThrough


@dataclass(frozen=True)
class RankOneCertificate:
    mode: CertificateMode
    witness: Word
    witness_standard: Word
    embedding: SubgraphWitness
    graph: DirectedLabeledGraph
    assertions: tuple[Assertion, ...]
    link_shape: tuple[int, int]
    notes: Mapping[str, str] = field(default_factory=dict)

    @property
    def metric(self) -> Metric:
        return self.mode.metric

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "metric": self.metric.value,
            "witness": {
                "bm": word_to_json(self.witness),
                "standard": word_to_json(self.witness_standard),
                "text": format_word(self.witness),
            },
            "embedding": self.embedding.to_dict(),
            "graph": graph_to_dict(self.graph),
            "link_shape": {"vertices": self.link_shape[0], "edges": self.link_shape[1]},
            "assertions": [_assertion_to_dict(a) for a in self.assertions],
            "notes": dict(self.notes),
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> RankOneCertificate:
        g = graph_from_dict(d["graph"])
        if not isinstance(g, DirectedLabeledGraph):
            raise CertificateMismatch("certificate graph must be directed")
        return cls(
            mode=CertificateMode(d["mode"]),
            witness=word_from_json(d["witness"]["bm"]),
            witness_standard=word_from_json(d["witness"]["standard"]),
            embedding=SubgraphWitness.from_dict(d["embedding"]),
            graph=g,
            assertions=tuple(_assertion_from_dict(a) for a in d["assertions"]),
            link_shape=(d["link_shape"]["vertices"], d["link_shape"]["edges"]),
            notes=dict(d.get("notes", {})),
        )


def _point_to_dict(p: LinkPoint) -> dict:
    if p.is_vertex:
        return {"gen": p.gen, "sign": p.sign}
    return {"edge": p.edge, "offset": p.offset}


def _point_from_dict(d: Mapping) -> LinkPoint:
    if "edge" in d:
        return LinkPoint.on(int(d["edge"]), int(d["offset"]))
    return LinkPoint.at(d["gen"], d["sign"])


def _assertion_to_dict(a: Assertion) -> dict:
    out: dict = {"kind": type(a).__name__}
    if isinstance(a, DistanceAtLeast):
        out.update(p=_point_to_dict(a.p), q=_point_to_dict(a.q), bound=a.bound)
    elif isinstance(a, DistanceEquals):
        out.update(p=_point_to_dict(a.p), q=_point_to_dict(a.q), value=a.value)
    elif isinstance(a, UniqueGeodesic):
        out.update(p=_point_to_dict(a.p), q=_point_to_dict(a.q), path=[_point_to_dict(x) for x in a.path])
    else:
        out.update(p=_point_to_dict(a.p), mid=_point_to_dict(a.mid), q=_point_to_dict(a.q))
    return out


def _assertion_from_dict(d: Mapping) -> Assertion:
    kind = d["kind"]
    p, q = _point_from_dict(d["p"]), _point_from_dict(d["q"])
    if kind == "DistanceAtLeast":
        return DistanceAtLeast(p, q, int(d["bound"]))
    if kind == "DistanceEquals":
        return DistanceEquals(p, q, int(d["value"]))
    if kind == "UniqueGeodesic":
        return UniqueGeodesic(p, q, tuple(_point_from_dict(x) for x in d["path"]))
    if kind == "NoPiPathThrough":
        return NoPiPathThrough(p, _point_from_dict(d["mid"]), q)
    raise ValueError(f"unknown assertion kind {kind!r}")


# --------------------------------------------------------------------------
# verification


def failed_assertions(cert: RankOneCertificate, L: LinkGraph) -> list[Assertion]:
    if L.mode is not cert.metric:
        raise CertificateMismatch(f"certificate needs the {cert.metric.value} link, got {L.mode.value}")
    if L.shape != tuple(cert.link_shape):
        raise CertificateMismatch(f"link shape {L.shape} does not match certificate {tuple(cert.link_shape)}")
    for a in cert.assertions:
        for p in a.points():
            try:
                L.validate(p)
            except InvalidPointError as exc:
                raise CertificateMismatch(str(exc)) from exc
    return [a for a in cert.assertions if not a.holds(L)]


def verify_certificate(cert: RankOneCertificate, L: LinkGraph) -> bool:
    return not failed_assertions(cert, L)


def _finish(mode, witness, dg, embedding, assertions, L, notes=None) -> RankOneCertificate:
    cert = RankOneCertificate(
        mode=mode,
        witness=witness,
        witness_standard=expand_to_standard(witness, dg),
        embedding=embedding,
        graph=dg,
        assertions=tuple(assertions),
        link_shape=L.shape,
        notes=notes or {},
    )
    bad = failed_assertions(cert, L)
    if bad:
        raise CertificateError(bad[0])
    return cert


def _check_base(g: LabeledGraph, dg: DirectedLabeledGraph) -> None:
    if dg.base != g:
        raise PreconditionError("direction is for a different graph")


def _check_directed_path(dg: DirectedLabeledGraph, path) -> None:
    for u, v in zip(path, path[1:]):
        if not dg.goes(u, v):
            raise PreconditionError("direction mismatch", f"edge {u}-{v} must run {u} -> {v}")


# --------------------------------------------------------------------------
# constructions


def certify_gamma_mn(
    g: LabeledGraph, w: SubgraphWitness, dg: DirectedLabeledGraph, L: LinkGraph | None = None
) -> RankOneCertificate:
    """Witness ``alpha[v2--v3][n] v3 v1`` for a full directed 2-path ``v1 -> v2 -> v3``.

    Labels are ``m >= 2`` on ``v1v2`` and ``n >= 3`` on ``v2v3``. The
    isosceles metric needs a triangle-free graph.
    """
    _check_base(g, dg)
    if w.kind is not WitnessKind.TWO_PATH_BIG_LABEL or len(w.vertices) != 3:
        raise PreconditionError("embedding is not a 2-path")
    v1, v2, v3 = w.vertices
    if not is_full_path(g, w.vertices):
        raise PreconditionError("embedding not full", "-".join(w.vertices))
    m, n = g.label(v1, v2), g.label(v2, v3)
    if n < 3:
        raise PreconditionError("second edge must be labeled at least 3", f"got {n}")
    if not is_triangle_free(g):
        raise PreconditionError("graph has a triangle", "isosceles metric needs triangle-free")
    _check_directed_path(dg, w.vertices)
    L = L or build_link(dg, Metric.ISOSCELES)
    k1, k2 = g.edge_key(v1, v2), g.edge_key(v2, v3)
    alpha = alpha_name(k2, n)
    x1, x2 = x_name(k1), x_name(k2)
    P = lambda gen, s: L.point(gen, s)  # noqa: E731
    assertions = [
        DistanceAtLeast(P(v1, "+"), P(alpha, "-"), PI),
        DistanceAtLeast(P(alpha, "+"), P(v3, "-"), PI),
        DistanceAtLeast(P(v3, "+"), P(v1, "-"), PI),
        DistanceEquals(P(v1, "+"), P(alpha, "-"), PI),
        DistanceEquals(P(alpha, "+"), P(v3, "-"), PI),
        UniqueGeodesic(P(v1, "+"), P(alpha, "-"), (P(v1, "+"), P(v2, "-"), P(x2, "-"), P(alpha, "-"))),
        NoPiPathThrough(P(v1, "-"), P(x1, "-"), P(v3, "+")),
    ]
    witness = ((alpha, 1), (v3, 1), (v1, 1))
    emb = SubgraphWitness(w.kind, w.vertices, (m, n))
    return _finish(CertificateMode.ISOSCELES_MN, witness, dg, emb, assertions, L)


def certify_gamma_222(
    g: LabeledGraph, w: SubgraphWitness, dg: DirectedLabeledGraph, L: LinkGraph | None = None
) -> RankOneCertificate:
    """Witness ``x[v1--v2] x[v3--v4]`` for a full directed all-2 path ``v1 -> v2 -> v3 -> v4``."""
    _check_base(g, dg)
    if len(w.vertices) != 4:
        raise PreconditionError("embedding is not a 3-path")
    v1, v2, v3, v4 = w.vertices
    if not is_full_path(g, w.vertices):
        raise PreconditionError("embedding not full", "-".join(w.vertices))
    labels = (g.label(v1, v2), g.label(v2, v3), g.label(v3, v4))
    if labels != (2, 2, 2):
        raise PreconditionError("labels not all 2", str(labels))
    if not is_triangle_free(g):
        raise PreconditionError("graph has a triangle", "isosceles metric needs triangle-free")
    _check_directed_path(dg, w.vertices)
    L = L or build_link(dg, Metric.ISOSCELES)
    x1, x3 = x_name(g.edge_key(v1, v2)), x_name(g.edge_key(v3, v4))
    P = lambda gen, s: L.point(gen, s)  # noqa: E731
    assertions = [
        DistanceEquals(P(x3, "+"), P(x1, "-"), PI),
        UniqueGeodesic(P(x3, "+"), P(x1, "-"), (P(x3, "+"), P(v3, "+"), P(v2, "-"), P(x1, "-"))),
        DistanceEquals(P(x1, "+"), P(x3, "-"), PI),
        NoPiPathThrough(P(x1, "+"), P(v1, "+"), P(x3, "-")),
    ]
    witness = ((x1, 1), (x3, 1))
    emb = SubgraphWitness(WitnessKind.THREE_PATH_ALL2, w.vertices, labels)
    return _finish(CertificateMode.ISOSCELES_222, witness, dg, emb, assertions, L)


def triangle_path(dg: DirectedLabeledGraph, triangle: SubgraphWitness) -> tuple[str, str, str]:
    """The directed 2-path ``v1 -> v2 -> v3`` starting at the triangle's first vertex."""
    a, b, c = triangle.vertices
    v2 = b if dg.goes(a, b) else c
    v3 = c if v2 == b else b
    if not (dg.goes(a, v2) and dg.goes(v2, v3) and dg.goes(v3, a)):
        raise PreconditionError("triangle is not cyclically directed", "-".join(triangle.vertices))
    return a, v2, v3


def triangle_axis_points(L: LinkGraph, g: LabeledGraph, path) -> tuple[LinkPoint, LinkPoint]:
    """Where the axis of ``x2 alpha_{1,3}`` crosses the link.

    The cells ``x2 = alpha_{2,n} v2`` and ``x1 = v2 alpha_{1,3}`` glue along
    ``v2`` into a rhombus whose long diagonal is the axis. It leaves the
    vertex through the middle of the first cell's start corner and comes
    back through the middle of the second cell's end corner.
    """
    v1, v2, v3 = path
    k1, k2 = g.edge_key(v1, v2), g.edge_key(v2, v3)
    n = g.label(v2, v3)
    x1, x2 = x_name(k1), x_name(k2)
    a13, a2n = alpha_name(k1, 3), alpha_name(k2, n)
    plus = L.midpoint(L.corner_edge((x1, v2, a13), "end"))
    minus = L.midpoint(L.corner_edge((x2, a2n, v2), "start"))
    return plus, minus


def certify_triangle(
    g: LabeledGraph, dg: DirectedLabeledGraph, triangle: SubgraphWitness, L: LinkGraph | None = None
) -> RankOneCertificate:
    """Witness ``x2 alpha_{1,3}`` for a cyclically directed 3-cycle, equilateral metric."""
    _check_base(g, dg)
    a, b, c = triangle.vertices
    if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise PreconditionError("triangle absent", "-".join(triangle.vertices))
    report = validate_orientation(dg)
    if not report.verdict:
        bad = next(r for r in report.cycles if not r.ok)
        raise PreconditionError("orientation invalid", f"{'-'.join(bad.vertices)}: {bad.reason}")
    path = triangle_path(dg, triangle)
    v1, v2, v3 = path
    L = L or build_link(dg, Metric.EQUILATERAL)
    plus, minus = triangle_axis_points(L, g, path)
    x2 = x_name(g.edge_key(v2, v3))
    a13 = alpha_name(g.edge_key(v1, v2), 3)
    assertions: list[Assertion] = [DistanceAtLeast(plus, minus, PI + 1)]
    for end in (plus, minus):
        for v in path:
            for s in "-+":
                assertions.append(DistanceAtLeast(end, L.point(v, s), 4 + 1))
    witness = ((x2, 1), (a13, 1))
    labels = (g.label(v1, v2), g.label(v2, v3), g.label(v3, v1))
    emb = SubgraphWitness(WitnessKind.TRIANGLE, path, labels)
    return _finish(CertificateMode.EQUILATERAL_TRIANGLE, witness, dg, emb, assertions, L)
