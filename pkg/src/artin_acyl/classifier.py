"""Decide which case of the classification a defining graph falls into.

Routes:

* graphs with at most two vertices are settled directly;
* triangle-free graphs: either complete bipartite with all labels 2
  (a direct product of free groups) or acylindrically hyperbolic, with a
  disconnection split or an isosceles-metric certificate as evidence;
* almost-large-type graphs: either an all-2 star or, once an appropriate
  direction is found, acylindrically hyperbolic with an equilateral-metric
  certificate built on a triangle;
* anything else is reported as outside the method's hypotheses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .certificate import (
    RankOneCertificate,
    certify_gamma_222,
    certify_gamma_mn,
    certify_triangle,
    verify_certificate,
)
from .errors import InconsistencyError, PreconditionError
from .graph import (
    DirectedLabeledGraph,
    LabeledGraph,
    almost_large_violation,
    connected_components,
    find_full_2path_big_label,
    find_full_3path_all2,
    find_triangle,
    graph_to_dict,
    is_complete_bipartite_all2,
    is_cone_over_isolated_all2,
    is_triangle_free,
    join_decompose,
)
from .link import Metric, build_link
from .orientation import find_appropriate_direction


class Verdict(str, Enum):
    ACYLINDRICALLY_HYPERBOLIC = "AcylindricallyHyperbolic"
    REDUCIBLE = "Reducible"
    SMALL_CASE = "SmallCase"
    OUT_OF_METHOD_SCOPE = "OutOfMethodScope"


_FLAGS_NONE = {"directly_indecomposable": None, "irreducible": None, "centerless": None}
_FLAGS_THEOREM = {"directly_indecomposable": True, "irreducible": True, "centerless": True}
_FLAGS_PRODUCT = {"directly_indecomposable": False, "irreducible": False, "centerless": None}


@dataclass(frozen=True)
class ClassificationReport:
    verdict: Verdict
    route: str
    evidence: dict
    flags: dict = field(default_factory=lambda: dict(_FLAGS_NONE))
    certificate: RankOneCertificate | None = None

    def to_dict(self) -> dict:
        evidence = dict(self.evidence)
        if self.certificate is not None:
            evidence["certificate"] = self.certificate.to_dict()
        return {
            "verdict": self.verdict.value,
            "route": self.route,
            "evidence": evidence,
            "flags": dict(self.flags),
            # flags are read off the theorem for this route, never computed
            "flags_basis": "theorem" if any(v is not None for v in self.flags.values()) else None,
        }


def _free_rank(n: int) -> str:
    return "Z" if n == 1 else f"F{n}"


def _product(parts) -> dict:
    p1, p2 = parts
    return {
        "kind": "join",
        "parts": [list(p1), list(p2)],
        "description": f"{_free_rank(len(p1))} x {_free_rank(len(p2))}",
    }


def classify_small(g: LabeledGraph) -> ClassificationReport:
    n = len(g)
    if n > 2 or n == 0:
        raise PreconditionError("small case needs one or two vertices", f"got {n}")
    if n == 1:
        return ClassificationReport(
            Verdict.SMALL_CASE, "small-graph",
            {"kind": "small", "group": "Z", "description": "Z, central quotient trivial"},
        )
    if not g.edges:
        return ClassificationReport(
            Verdict.ACYLINDRICALLY_HYPERBOLIC, "small-graph",
            {"kind": "small", "group": "F2", "description": "F2, hyperbolic with trivial center"},
            {"directly_indecomposable": True, "irreducible": True, "centerless": True},
        )
    m = g.edges[0].label
    if m == 2:
        return ClassificationReport(
            Verdict.REDUCIBLE, "small-graph",
            {"kind": "join", "parts": [[g.vertices[0]], [g.vertices[1]]], "description": "Z x Z"},
            dict(_FLAGS_PRODUCT),
        )
    quotient = f"Z/{m} * Z/2" if m % 2 else f"Z/{m // 2} * Z"
    return ClassificationReport(
        Verdict.SMALL_CASE, "small-graph",
        {
            "kind": "small",
            "group": f"dihedral-type Artin group, label {m}",
            "central_quotient": quotient,
            "description": f"infinite cyclic center; central quotient {quotient}, virtually F2",
        },
    )


def _with_directions(g: LabeledGraph, path) -> DirectedLabeledGraph:
    return DirectedLabeledGraph.from_pairs(g, zip(path, path[1:]))


def _checked(cert: RankOneCertificate, mode: Metric) -> RankOneCertificate:
    if not verify_certificate(cert, build_link(cert.graph, mode)):
        raise InconsistencyError("freshly built certificate failed re-verification")
    return cert


def classify_triangle_free(g: LabeledGraph) -> ClassificationReport:
    if len(g) < 3:
        raise PreconditionError("needs at least three vertices", f"got {len(g)}")
    if not is_triangle_free(g):
        raise PreconditionError("graph has a triangle", "-".join(find_triangle(g).vertices))

    bipartition = is_complete_bipartite_all2(g)
    comps = connected_components(g)
    two_path = find_full_2path_big_label(g)
    three_path = find_full_3path_all2(g) if two_path is None else None
    cond_v = len(comps) > 1 or two_path is not None or three_path is not None
    if (bipartition is not None) == cond_v:
        raise InconsistencyError(
            f"complete-bipartite-all-2 test ({bipartition is not None}) and "
            f"subgraph test ({cond_v}) must disagree"
        )

    if bipartition is not None:
        return ClassificationReport(
            Verdict.REDUCIBLE, "triangle-free/complete-bipartite-all-2",
            _product(bipartition), dict(_FLAGS_PRODUCT),
        )
    if len(comps) > 1:
        rest = [v for c in comps[1:] for v in c]
        return ClassificationReport(
            Verdict.ACYLINDRICALLY_HYPERBOLIC, "triangle-free/disconnected",
            {
                "kind": "free-product",
                "parts": [list(comps[0]), rest],
                "description": "free product of two infinite subgroups",
            },
            dict(_FLAGS_THEOREM),
        )
    if two_path is not None:
        dg = _with_directions(g, two_path.vertices)
        cert = _checked(certify_gamma_mn(g, two_path, dg), Metric.ISOSCELES)
        route = "triangle-free/two-path"
    else:
        dg = _with_directions(g, three_path.vertices)
        cert = _checked(certify_gamma_222(g, three_path, dg), Metric.ISOSCELES)
        route = "triangle-free/three-path-all-2"
    return ClassificationReport(
        Verdict.ACYLINDRICALLY_HYPERBOLIC, route,
        {"kind": "rank-one", "witness": cert.to_dict()["witness"]["text"]},
        dict(_FLAGS_THEOREM), cert,
    )


def classify_almost_large(g: LabeledGraph) -> ClassificationReport:
    if len(g) < 3:
        raise PreconditionError("needs at least three vertices", f"got {len(g)}")
    bad = almost_large_violation(g)
    if bad is not None:
        raise PreconditionError("not almost large type", f"{bad[1]}: {'-'.join(bad[0])}")

    apex = is_cone_over_isolated_all2(g)
    if apex is not None:
        leaves = [v for v in g.vertices if v != apex]
        return ClassificationReport(
            Verdict.REDUCIBLE, "almost-large/star-all-2",
            {
                "kind": "join",
                "parts": [[apex], leaves],
                "description": f"Z x {_free_rank(len(leaves))}",
            },
            dict(_FLAGS_PRODUCT),
        )
    found = find_appropriate_direction(g)
    if found is None:
        return ClassificationReport(
            Verdict.OUT_OF_METHOD_SCOPE, "almost-large/not-directable",
            {"kind": "hypothesis", "description": "cannot be appropriately directed (exhaustive search)"},
        )
    dg, method = found
    if is_triangle_free(g):
        return classify_triangle_free(g)
    triangle = find_triangle(g)
    cert = _checked(certify_triangle(g, dg, triangle), Metric.EQUILATERAL)
    return ClassificationReport(
        Verdict.ACYLINDRICALLY_HYPERBOLIC, "almost-large/triangle",
        {
            "kind": "rank-one",
            "witness": cert.to_dict()["witness"]["text"],
            "direction_method": method,
            "direction": graph_to_dict(dg),
        },
        dict(_FLAGS_THEOREM), cert,
    )


def classify(g: LabeledGraph | DirectedLabeledGraph) -> ClassificationReport:
    if isinstance(g, DirectedLabeledGraph):
        g = g.base
    if len(g) <= 2:
        return classify_small(g)
    if is_triangle_free(g):
        return classify_triangle_free(g)
    bad = almost_large_violation(g)
    if bad is None:
        return classify_almost_large(g)
    cycle, why = bad
    return ClassificationReport(
        Verdict.OUT_OF_METHOD_SCOPE, "out-of-scope",
        {
            "kind": "hypothesis",
            "description": "neither triangle-free nor almost large type",
            "violation": why,
            "cycle": list(cycle),
        },
    )


def reducible_parts_ok(g: LabeledGraph, report: ClassificationReport) -> bool:
    """The decomposition of a Reducible report is a genuine join with all-2 cross edges."""
    p1, p2 = report.evidence["parts"]
    if not p1 or not p2 or set(p1) & set(p2) or set(p1) | set(p2) != set(g.vertices):
        return False
    ok = all(g.has_edge(u, v) and g.label(u, v) == 2 for u in p1 for v in p2)
    return ok and join_decompose(g) is not None
