"""Oracle-backed sweeps.

Each ``check_*`` function looks at one graph and returns a list of
mismatch descriptions (empty when everything agrees). ``run_selftest``
maps them over the exhaustive corpora, optionally across worker
processes (``ARTIN_ACYL_WORKERS``).
"""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import oracles
from .classifier import Verdict, classify
from .corpus import almost_large_sweep, triangle_free_sweep
from .graph import DirectedLabeledGraph, LabeledGraph, graph_to_dict
from .link import TWO_PI, LinkGraph, Metric, build_link, distances_from, systole
from .orientation import iter_appropriate_directions, orient_search
from .presentation import verify_bm_equivalence

WORKERS_ENV = "ARTIN_ACYL_WORKERS"
MAX_SWEEP_VERTICES = 6


def _tag(g, what: str) -> str:
    edges = ",".join(f"{e['source']}{'>' if e.get('directed') else '-'}{e['target']}:{e['label']}"
                     for e in graph_to_dict(g)["edges"])
    return f"{what} on [{edges}]"


def link_oracle_mismatches(L: LinkGraph) -> list[str]:
    """Dijkstra distances against Floyd-Warshall, and systole against cycle enumeration."""
    out = []
    D = oracles.floyd_warshall_all_pairs(L)
    for i in range(len(L.vertices)):
        row = distances_from(L, L.label(i))
        got = np.array([row[L.label(j)] for j in range(len(L.vertices))], dtype=float)
        if not np.array_equal(got, D[i]):
            out.append(f"distance row {L.label(i)} differs from Floyd-Warshall")
            break
    if len(L.vertices) <= oracles.MAX_SYSTOLE_VERTICES:
        s, b = systole(L), oracles.brute_systole(L)
        if s != b:
            out.append(f"systole {s} but brute force gives {b}")
    return out


def check_iv_v(g: LabeledGraph) -> list[str]:
    """"Not complete bipartite with all labels 2" must agree with "disconnected or has a bold full path"."""
    bipartite2 = oracles.brute_complete_bipartite_all2(g)
    v = (
        not oracles.brute_connected(g)
        or bool(oracles.brute_full_subgraph(g, "two-path-big-label"))
        or bool(oracles.brute_full_subgraph(g, "three-path-all-2"))
    )
    out = []
    if bipartite2 == v:
        out.append(_tag(g, f"complete bipartite all-2 is {bipartite2}, and so is the subgraph condition"))
    verdict = classify(g).verdict
    if (verdict is Verdict.REDUCIBLE) != bipartite2:
        out.append(_tag(g, f"classifier says {verdict.value} but complete bipartite all-2 is {bipartite2}"))
    return out


def check_bm(dg: DirectedLabeledGraph) -> list[str]:
    return [] if verify_bm_equivalence(dg) else [_tag(dg, "BM presentation not equivalent")]


def check_isosceles(g: LabeledGraph, with_oracles: bool = True) -> list[str]:
    dg = DirectedLabeledGraph.lexicographic(g)
    L = build_link(dg, Metric.ISOSCELES)
    out = check_bm(dg)
    s = systole(L)
    if s < TWO_PI:
        out.append(_tag(dg, f"isosceles systole {s} < {TWO_PI}"))
    if with_oracles:
        out += [_tag(dg, m) for m in link_oracle_mismatches(L)]
    return out


def check_equilateral(g: LabeledGraph, with_oracles: bool = True) -> tuple[int, list[str]]:
    """Link condition for every appropriate direction; returns (directions checked, mismatches)."""
    out = []
    count = 0
    for dg in iter_appropriate_directions(g):
        L = build_link(dg, Metric.EQUILATERAL)
        s = systole(L)
        if s < TWO_PI:
            out.append(_tag(dg, f"equilateral systole {s} < {TWO_PI}"))
        if with_oracles and count == 0:
            out += check_bm(dg)
            out += [_tag(dg, m) for m in link_oracle_mismatches(L)]
        count += 1
    return count, out


def check_orientation_oracle(g: LabeledGraph) -> list[str]:
    if len(g.edges) > 6:
        return []
    found = orient_search(g) is not None
    brute = oracles.brute_orientation_exists(g)
    return [] if found == brute else [_tag(g, f"orient_search found={found}, brute force={brute}")]


def _triangle_free_job(g: LabeledGraph) -> list[str]:
    return check_iv_v(g) + check_isosceles(g)


def _almost_large_job(g: LabeledGraph) -> tuple[int, list[str]]:
    n, out = check_equilateral(g)
    return n, out + check_orientation_oracle(g)


def workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: Sequence, n_workers: int | None = None) -> list:
    n_workers = workers() if n_workers is None else n_workers
    if n_workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(n_workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * n_workers))))


def run_selftest(max_vertices: int = 5, labels: Iterable[int] | None = None) -> dict:
    """Exhaustive sweeps up to ``max_vertices``; the summary's ``ok`` is True iff nothing disagreed."""
    if not 3 <= max_vertices <= MAX_SWEEP_VERTICES:
        raise ValueError(f"max-vertices must be between 3 and {MAX_SWEEP_VERTICES}")
    labels = tuple(sorted(set(labels))) if labels else None
    if labels and min(labels) < 2:
        raise ValueError("labels must be at least 2")
    tf = list(triangle_free_sweep(3, max_vertices, labels or (2, 3)))
    al = list(almost_large_sweep(3, min(max_vertices, 5), labels or (2, 3, 4)))
    tf_res = parallel_map(_triangle_free_job, tf)
    al_res = parallel_map(_almost_large_job, al)
    problems = [m for r in tf_res for m in r] + [m for _, r in al_res for m in r]
    return {
        "ok": not problems,
        "triangle_free_graphs": len(tf),
        "almost_large_graphs": len(al),
        "appropriate_directions": sum(n for n, _ in al_res),
        "mismatches": len(problems),
        "examples": problems[:10],
    }
