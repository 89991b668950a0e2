"""Appropriate directions: validation and three ways of producing one.

A cycle is read along a traversal; each of its edges is then either
traversed forward (along its direction) or backward. The admissible
patterns are written in those terms, together with a label constraint.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from .errors import PreconditionError
from .graph import (
    DirectedLabeledGraph,
    LabeledGraph,
    almost_large_violation,
    four_cycles,
    is_bipartite,
    is_square_free,
    triangles,
)

FWD, BWD, ANY = "fwd", "bwd", "any"
BIG, ANY_LABEL = ">2", ">=2"

Pattern = tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class OrientationPatternTable:
    triangles: dict[str, Pattern]
    squares: dict[str, Pattern]
    allow_reflection: bool = True
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def variants(self, size: int) -> list[tuple[str, Pattern]]:
        """Every rotation (and, if allowed, reflection) of the patterns of a cycle length."""
        if size not in self._cache:
            self._cache[size] = self._variants(size)
        return self._cache[size]

    def _variants(self, size: int) -> list[tuple[str, Pattern]]:
        base = self.triangles if size == 3 else self.squares
        out = []
        for name, pat in base.items():
            forms = [pat]
            if self.allow_reflection:
                flip = {FWD: BWD, BWD: FWD, ANY: ANY}
                forms.append(tuple((flip[d], lab) for d, lab in reversed(pat)))
            for form in forms:
                for r in range(size):
                    rotated = form[r:] + form[:r]
                    if (name, rotated) not in out:
                        out.append((name, rotated))
        return out


DEFAULT_PATTERNS = OrientationPatternTable(
    triangles={"cyclic-triangle": ((FWD, BIG), (FWD, BIG), (FWD, BIG))},
    squares={
        # the two big edges are parallel when the square is drawn flat
        "opposite-antialigned": ((FWD, BIG), (ANY, ANY_LABEL), (BWD, BIG), (ANY, ANY_LABEL)),
        "adjacent-head-to-tail": ((FWD, BIG), (FWD, BIG), (ANY, ANY_LABEL), (ANY, ANY_LABEL)),
    },
)


@dataclass(frozen=True)
class CycleResult:
    vertices: tuple[str, ...]
    pattern: str | None
    reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.pattern is not None

    def to_dict(self) -> dict:
        return {"cycle": list(self.vertices), "pattern": self.pattern, "reason": self.reason}


@dataclass(frozen=True)
class OrientationReport:
    verdict: bool
    cycles: tuple[CycleResult, ...]

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "cycles": [c.to_dict() for c in self.cycles]}


def _require_almost_large(g: LabeledGraph) -> None:
    bad = almost_large_violation(g)
    if bad is not None:
        cyc, why = bad
        raise PreconditionError("not almost large type", f"{why}: {'-'.join(cyc)}")


def _signature(dg: DirectedLabeledGraph, cyc: Sequence[str]) -> list[tuple[str, int]]:
    sig = []
    for i, u in enumerate(cyc):
        w = cyc[(i + 1) % len(cyc)]
        sig.append((FWD if dg.goes(u, w) else BWD, dg.base.label(u, w)))
    return sig


def match_cycle(
    dg: DirectedLabeledGraph, cyc: Sequence[str], table: OrientationPatternTable = DEFAULT_PATTERNS
) -> CycleResult:
    sig = _signature(dg, cyc)
    for name, pat in table.variants(len(cyc)):
        if all(
            (d == ANY or d == sd) and (lab == ANY_LABEL or m > 2)
            for (d, lab), (sd, m) in zip(pat, sig)
        ):
            return CycleResult(tuple(cyc), name)
    if len(cyc) == 3:
        if any(m <= 2 for _, m in sig):
            why = "3-cycle has an edge labeled 2"
        else:
            why = "3-cycle is not cyclically directed"
    else:
        why = "no pair of edges labeled above 2 is parallel or head-to-tail"
    return CycleResult(tuple(cyc), None, why)


def all_cycles(g: LabeledGraph) -> list[tuple[str, ...]]:
    return [*triangles(g), *four_cycles(g)]


def validate_orientation(
    dg: DirectedLabeledGraph, table: OrientationPatternTable = DEFAULT_PATTERNS
) -> OrientationReport:
    _require_almost_large(dg.base)
    results = tuple(match_cycle(dg, c, table) for c in all_cycles(dg.base))
    return OrientationReport(all(r.ok for r in results), results)


def _cyclic_pairs(cyc: Sequence[str]) -> list[tuple[str, str]]:
    return [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


def cor13_violation(g: LabeledGraph, apex: str) -> PreconditionError | None:
    """Why ``g`` fails the cone-over-square-free-bipartite hypotheses at ``apex``."""
    if not g.has_vertex(apex):
        return PreconditionError("not a cone", f"{apex!r} is not a vertex")
    others = [v for v in g.vertices if v != apex]
    missing = [v for v in others if not g.has_edge(apex, v)]
    if missing:
        return PreconditionError("not a cone", f"{apex!r} is not adjacent to {missing[0]!r}")
    rest = g.induced(others)
    if is_bipartite(rest) is None:
        return PreconditionError("base not bipartite")
    if not is_square_free(rest):
        return PreconditionError("base not square-free")
    for e in rest.edges:
        if e.label <= 2:
            return PreconditionError("label condition fails", f"base edge {e.key} labeled {e.label}")
    for v in others:
        if rest.degree(v) and g.label(apex, v) <= 2:
            return PreconditionError("label condition fails", f"apex edge to {v!r} labeled 2")
    return None


def orient_cor13(g: LabeledGraph, apex: str) -> DirectedLabeledGraph:
    """Direct a cone over a square-free bipartite graph.

    Base edges run white to black; apex edges run apex to white and black
    to apex. Edges at isolated base vertices keep the lexicographic direction.
    """
    err = cor13_violation(g, apex)
    if err is not None:
        raise err
    others = [v for v in g.vertices if v != apex]
    rest = g.induced(others)
    color = is_bipartite(rest)
    orient = {}
    for e in g.edges:
        if apex in (e.u, e.v):
            v = e.v if e.u == apex else e.u
            if rest.degree(v) == 0:
                orient[e.key] = (e.u, e.v)
            elif color[v] == 0:
                orient[e.key] = (apex, v)
            else:
                orient[e.key] = (v, apex)
        else:
            orient[e.key] = (e.u, e.v) if color[e.u] == 0 else (e.v, e.u)
    return DirectedLabeledGraph(g, orient)


def orient_squarefree(g: LabeledGraph) -> DirectedLabeledGraph:
    if not is_square_free(g):
        raise PreconditionError("not square-free", "-".join(four_cycles(g)[0]))
    _require_almost_large(g)
    orient = {e.key: (e.u, e.v) for e in g.edges}
    # triangles are edge-disjoint here, so no edge is directed twice
    for tri in triangles(g):
        for s, t in _cyclic_pairs(tri):
            orient[g.edge_key(s, t)] = (s, t)
    return DirectedLabeledGraph(g, orient)


def orient_search(
    g: LabeledGraph, table: OrientationPatternTable = DEFAULT_PATTERNS
) -> DirectedLabeledGraph | None:
    """First appropriate direction in backtracking order, or None."""
    return next(iter_appropriate_directions(g, table), None)


def iter_appropriate_directions(
    g: LabeledGraph, table: OrientationPatternTable = DEFAULT_PATTERNS
) -> Iterator[DirectedLabeledGraph]:
    """Every appropriate direction, by backtracking in lexicographic edge order, forward first.

    Each cycle is checked as soon as its last edge receives a direction.
    """
    _require_almost_large(g)
    edges = list(g.edges)
    pos = {e.key: i for i, e in enumerate(edges)}
    due: list[list[tuple[str, ...]]] = [[] for _ in edges]
    for cyc in all_cycles(g):
        last = max(pos[g.edge_key(u, w)] for u, w in _cyclic_pairs(cyc))
        due[last].append(cyc)

    orient: dict[str, tuple[str, str]] = {}

    def consistent(i: int) -> bool:
        if not due[i]:
            return True
        partial = _PartialDirection(g, orient)
        return all(match_cycle(partial, c, table).ok for c in due[i])

    def place(i: int):
        if i == len(edges):
            yield DirectedLabeledGraph(g, dict(orient))
            return
        e = edges[i]
        for st in ((e.u, e.v), (e.v, e.u)):
            orient[e.key] = st
            if consistent(i):
                yield from place(i + 1)
        del orient[e.key]

    yield from place(0)


class _PartialDirection:
    """Quacks like DirectedLabeledGraph for the cycles whose edges are all placed."""

    def __init__(self, g: LabeledGraph, orient: dict[str, tuple[str, str]]):
        self.base = g
        self.orientation = orient

    def goes(self, u: str, v: str) -> bool:
        return self.orientation[self.base.edge_key(u, v)] == (u, v)


def cone_apexes(g: LabeledGraph) -> list[str]:
    n = len(g)
    return [v for v in g.vertices if g.degree(v) == n - 1]


def find_appropriate_direction(g: LabeledGraph) -> tuple[DirectedLabeledGraph, str] | None:
    """Try the cone construction, then the square-free one, then search.

    Returns the direction and the name of the method that produced it.
    Constructive outputs are re-validated before being returned.
    """
    _require_almost_large(g)
    for apex in cone_apexes(g):
        if cor13_violation(g, apex) is None:
            dg = orient_cor13(g, apex)
            if validate_orientation(dg).verdict:
                return dg, "cone-construction"
    if is_square_free(g):
        dg = orient_squarefree(g)
        if validate_orientation(dg).verdict:
            return dg, "square-free-construction"
    dg = orient_search(g)
    if dg is not None:
        return dg, "search"
    return None
