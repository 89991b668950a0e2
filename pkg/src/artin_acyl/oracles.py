"""Slow but obvious reference implementations, for cross-checking only.

Nothing here shares code with the routines it checks.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .errors import PreconditionError
from .graph import DirectedLabeledGraph, LabeledGraph
from .link import LinkGraph
from .orientation import validate_orientation

MAX_SYSTOLE_VERTICES = 24
MAX_ORIENTATION_EDGES = 16


def floyd_warshall_all_pairs(L: LinkGraph) -> np.ndarray:
    n = len(L.vertices)
    D = np.full((n, n), np.inf)
    np.fill_diagonal(D, 0)
    for e in L.edges:
        if e.weight < D[e.a, e.b]:
            D[e.a, e.b] = D[e.b, e.a] = e.weight
    for k in range(n):
        D = np.minimum(D, D[:, k, None] + D[None, k, :])
    return D


def brute_systole(L: LinkGraph) -> int | float:
    """Shortest simple cycle by depth-first enumeration, parallel-edge 2-gons included."""
    n = len(L.vertices)
    if n > MAX_SYSTOLE_VERTICES:
        raise PreconditionError("link too large for brute force", f"{n} vertices")
    incident = [[] for _ in range(n)]
    for k, e in enumerate(L.edges):
        incident[e.a].append((k, e.b, e.weight))
        incident[e.b].append((k, e.a, e.weight))
    best = math.inf

    # cycles are enumerated from their least vertex, so the walk stays above it
    def walk(start, u, length, on_path, used):
        nonlocal best
        for k, v, w in incident[u]:
            if k in used or length + w >= best:
                continue
            if v == start:
                best = length + w
            elif v > start and v not in on_path:
                on_path.add(v)
                used.add(k)
                walk(start, v, length + w, on_path, used)
                used.discard(k)
                on_path.discard(v)

    for s in range(n):
        walk(s, s, 0, {s}, set())
    return best


def brute_orientation_exists(g: LabeledGraph) -> bool:
    edges = list(g.edges)
    if len(edges) > MAX_ORIENTATION_EDGES:
        raise PreconditionError("too many edges for brute force", f"{len(edges)} edges")
    for flips in itertools.product((False, True), repeat=len(edges)):
        orient = {e.key: ((e.v, e.u) if f else (e.u, e.v)) for e, f in zip(edges, flips)}
        if validate_orientation(DirectedLabeledGraph(g, orient)).verdict:
            return True
    return False


PATTERNS = {
    # name: (number of vertices, label test)
    "two-path": (3, lambda labels: True),
    "two-path-big-label": (3, lambda labels: max(labels) > 2),
    "three-path": (4, lambda labels: True),
    "three-path-all-2": (4, lambda labels: all(m == 2 for m in labels)),
}


def brute_full_subgraph(g: LabeledGraph, pattern: str) -> list[tuple[str, ...]]:
    """Every ordered vertex tuple spanning exactly an induced path of the pattern."""
    size, test = PATTERNS[pattern]
    labels = {}
    for e in g.edges:
        labels[frozenset((e.u, e.v))] = e.label
    found = []
    for tup in itertools.permutations(g.vertices, size):
        want = {frozenset(tup[i:i + 2]) for i in range(size - 1)}
        have = {frozenset(p) for p in itertools.combinations(tup, 2) if frozenset(p) in labels}
        if have == want and test([labels[frozenset(tup[i:i + 2])] for i in range(size - 1)]):
            found.append(tup)
    return found


def brute_joins(g: LabeledGraph) -> list[tuple[frozenset, frozenset]]:
    """All unordered splits of the vertex set into two sides joined by label-2 edges."""
    verts = list(g.vertices)
    out = []
    for r in range(1, len(verts)):
        for side in itertools.combinations(verts, r):
            if verts[0] not in side:
                continue
            other = [v for v in verts if v not in side]
            if all(g.has_edge(u, v) and g.label(u, v) == 2 for u in side for v in other):
                out.append((frozenset(side), frozenset(other)))
    return out


def brute_complete_bipartite_all2(g: LabeledGraph) -> bool:
    """Some split into two edgeless sides with every cross pair an edge labeled 2."""
    for side, other in brute_joins(g):
        if all(not g.has_edge(u, v) for u, v in itertools.combinations(side, 2)) and all(
            not g.has_edge(u, v) for u, v in itertools.combinations(other, 2)
        ):
            return True
    return False


def brute_triangle_free(g: LabeledGraph) -> bool:
    return not any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for a, b, c in itertools.combinations(g.vertices, 3)
    )


def brute_connected(g: LabeledGraph) -> bool:
    reach = {g.vertices[0]}
    changed = True
    while changed:
        changed = False
        for e in g.edges:
            if (e.u in reach) != (e.v in reach):
                reach |= {e.u, e.v}
                changed = True
    return len(reach) == len(g.vertices)


# free groups, by string rewriting: a letter is "g" or "g^-1"


def _letters(w) -> list[str]:
    return [g if e == 1 else f"{g}^-1" for g, e in w]


def _inv(letter: str) -> str:
    return letter[:-3] if letter.endswith("^-1") else letter + "^-1"


def reduce_by_rewriting(w) -> list[str]:
    """Delete adjacent inverse pairs until none is left."""
    s = _letters(w)
    changed = True
    while changed:
        changed = False
        for i in range(len(s) - 1):
            if s[i + 1] == _inv(s[i]):
                del s[i:i + 2]
                changed = True
                break
    while len(s) >= 2 and s[-1] == _inv(s[0]):
        s = s[1:-1]
    return s


def conjugate_up_to_inverse(u, v) -> bool:
    """Cyclically reduced ``u`` occurs in ``v+v`` or in ``v^-1 + v^-1``."""
    a = reduce_by_rewriting(u)
    for b in (reduce_by_rewriting(v), [_inv(x) for x in reversed(reduce_by_rewriting(v))]):
        if len(a) == len(b) and (not a or any(b[k:] + b[:k] == a for k in range(len(b)))):
            return True
    return False
