"""The acceptance suite: one test per criterion, each recording a PASS/FAIL line.

Exact integer arithmetic throughout, so every tolerance is zero.
Set ``ARTIN_ACYL_WORKERS`` to spread the sweeps over several processes.
"""

import random
from dataclasses import replace

import pytest

from artin_acyl import oracles
from artin_acyl.certificate import (
    DistanceAtLeast,
    DistanceEquals,
    certify_gamma_222,
    certify_gamma_mn,
    certify_triangle,
    triangle_axis_points,
    verify_certificate,
)
from artin_acyl.corpus import (
    almost_large_sweep,
    random_cor13_cone,
    random_gamma_mn_graph,
    random_square_free_almost_large,
    triangle_free_sweep,
)
from artin_acyl.graph import DirectedLabeledGraph, find_full_2path_big_label, find_full_3path_all2, find_triangle
from artin_acyl.link import PI, TWO_PI, Metric, build_link, geodesics_between, link_distance, systole
from artin_acyl.orientation import (
    iter_appropriate_directions,
    orient_cor13,
    orient_search,
    orient_squarefree,
    validate_orientation,
)
from artin_acyl.presentation import (
    alternating,
    bm_closing_relation,
    bm_presentation,
    expand_to_standard,
    inverse,
    verify_bm_equivalence,
)
from artin_acyl.selftest import check_iv_v, link_oracle_mismatches, parallel_map
from helpers import cycle, graph

SEED = 20240601


@pytest.fixture(scope="module")
def tf_graphs():
    return list(triangle_free_sweep(3, 6, (2, 3)))


@pytest.fixture(scope="module")
def al_graphs():
    return list(almost_large_sweep(3, 5, (2, 3, 4)))


@pytest.fixture(scope="module")
def gamma_mn_cases():
    rng = random.Random(SEED)
    cases = []
    for _ in range(50):
        m, n = rng.randint(2, 5), rng.randint(3, 5)
        g, dg, _ = random_gamma_mn_graph(rng, m, n)
        cases.append((m, n, g, dg))
    return cases


def _isosceles_systole(g):
    return systole(build_link(DirectedLabeledGraph.lexicographic(g), Metric.ISOSCELES))


def _equilateral_systoles(g):
    return [systole(build_link(dg, Metric.EQUILATERAL)) for dg in iter_appropriate_directions(g)]


def _links_for_oracles(g):
    dg = next(iter_appropriate_directions(g), None) or DirectedLabeledGraph.lexicographic(g)
    return [build_link(dg, mode) for mode in Metric]


def _tf_oracle_job(g):
    return link_oracle_mismatches(build_link(DirectedLabeledGraph.lexicographic(g), Metric.ISOSCELES))


def _al_oracle_job(g):
    return [m for L in _links_for_oracles(g) for m in link_oracle_mismatches(L)]


def test_criterion_1_iv_v_sweep(tf_graphs, acceptance):
    bad = [m for ms in parallel_map(check_iv_v, tf_graphs) for m in ms]
    ok = acceptance(1, not bad, f"non-bipartite and subgraph conditions agree on {len(tf_graphs) - len(bad)}/{len(tf_graphs)} "
                               "triangle-free graphs (3-6 vertices, labels 2,3)")
    assert ok, bad[:5]


def test_criterion_2_link_condition(tf_graphs, al_graphs, acceptance):
    iso = parallel_map(_isosceles_systole, tf_graphs)
    eq = [s for ss in parallel_map(_equilateral_systoles, al_graphs) for s in ss]
    bad_iso = sum(s < TWO_PI for s in iso)
    bad_eq = sum(s < TWO_PI for s in eq)
    ok = acceptance(2, bad_iso == bad_eq == 0,
                    f"isosceles systole >= 24 on {len(iso)} graphs (min {min(iso)}), "
                    f"equilateral systole >= 24 on {len(eq)} appropriate directions (min {min(eq)}); "
                    f"violations {bad_iso}+{bad_eq}")
    assert ok


def test_criterion_3_gamma_mn_distances(gamma_mn_cases, acceptance):
    bad = []
    for m, n, g, dg in gamma_mn_cases:
        L = build_link(dg, Metric.ISOSCELES)
        a = f"alpha[v2--v3][{n}]"

        def d(p, q, L=L):
            return link_distance(L, L.point(*p), L.point(*q))

        d1, d2, d3 = d(("v1", "+"), (a, "-")), d((a, "+"), ("v3", "-")), d(("v3", "+"), ("v1", "-"))
        gs = geodesics_between(L, L.point("v1", "+"), L.point(a, "-"))
        want = ("v1+", "v2-", "x[v2--v3]-", f"{a}-")
        if not (d1 == PI and d2 == PI and d3 >= PI and len(gs) == 1
                and tuple(map(str, gs[0].points)) == want):
            bad.append((m, n, d1, d2, d3, len(gs)))
    ok = acceptance(3, not bad, f"{len(gamma_mn_cases) - len(bad)}/{len(gamma_mn_cases)} random full "
                               "Gamma_{m,n}: distances 12, 12, >= 12 and unique geodesic P")
    assert ok, bad


def test_criterion_4_certificates(gamma222, tri333, acceptance):
    g, dg = gamma222
    c222 = certify_gamma_222(g, find_full_3path_all2(g), dg)
    ok222 = verify_certificate(c222, build_link(dg, Metric.ISOSCELES))
    g3, dg3 = tri333
    L3 = build_link(dg3, Metric.EQUILATERAL)
    ctri = certify_triangle(g3, dg3, find_triangle(g3), L3)
    oktri = verify_certificate(ctri, L3)
    plus, minus = triangle_axis_points(L3, g3, ctri.embedding.vertices)
    gap = link_distance(L3, plus, minus)
    ok = acceptance(4, ok222 and oktri and gap >= PI + 1,
                    f"Gamma_222 certificate verifies={ok222}, triangle certificate verifies={oktri}, "
                    f"d(l+, l-) = {gap} >= 13")
    assert ok


def _bm_job(g):
    return verify_bm_equivalence(DirectedLabeledGraph.lexicographic(g))


def test_criterion_5_presentation_equivalence(tf_graphs, al_graphs, acceptance):
    singles, rewrites = [], []
    for m in range(2, 11):
        for pair in (("s", "t"), ("t", "s")):
            g = graph("st", ("s", "t", m))
            dg = DirectedLabeledGraph.from_pairs(g, [pair])
            singles.append(verify_bm_equivalence(dg))
            (e, s, t), = dg.directed_edges()
            bm = bm_presentation(dg)
            left, right = bm_closing_relation(e, s, t)
            closing = tuple(expand_to_standard(left, dg, bm)) + tuple(inverse(expand_to_standard(right, dg, bm)))
            braid = alternating(s, t, m) + inverse(alternating(t, s, m))
            rewrites.append(oracles.conjugate_up_to_inverse(closing, braid))
    sweep = parallel_map(_bm_job, tf_graphs + al_graphs)
    ok = acceptance(5, all(singles) and all(rewrites) and all(sweep),
                    f"single edges m=2..10 {sum(singles)}/{len(singles)}, rewriting oracle "
                    f"{sum(rewrites)}/{len(rewrites)}, sweep graphs {sum(sweep)}/{len(sweep)}")
    assert ok


def test_criterion_6_oracle_agreement(tf_graphs, al_graphs, gamma_mn_cases, acceptance):
    bad = [m for ms in parallel_map(_tf_oracle_job, tf_graphs) for m in ms]
    bad += [m for ms in parallel_map(_al_oracle_job, al_graphs) for m in ms]
    for *_, dg in gamma_mn_cases:
        for mode in Metric:
            bad += link_oracle_mismatches(build_link(dg, mode))
    small = [g for g in al_graphs if len(g.edges) <= 6]
    rng = random.Random(SEED)
    for _ in range(40):
        small.append(random_square_free_almost_large(rng, rng.randint(4, 5)))
    small = [g for g in small if len(g.edges) <= 6]
    orient_bad = [g for g in small if (orient_search(g) is not None) != oracles.brute_orientation_exists(g)]
    n_links = len(tf_graphs) + 2 * len(al_graphs) + 2 * len(gamma_mn_cases)
    ok = acceptance(6, not bad and not orient_bad,
                    f"distance/systole oracles on {n_links} links: {len(bad)} mismatches; "
                    f"orient_search vs brute force on {len(small)} graphs: {len(orient_bad)} mismatches")
    assert ok, (bad[:5], orient_bad[:5])


def test_criterion_7_constructive_orientations(acceptance):
    rng = random.Random(SEED)
    cones = [random_cor13_cone(rng) for _ in range(30)]
    cone_ok = sum(validate_orientation(orient_cor13(g, apex)).verdict for g, apex in cones)
    sf = [random_square_free_almost_large(rng) for _ in range(30)]
    sf_ok = sum(validate_orientation(orient_squarefree(g)).verdict for g in sf)
    ok = acceptance(7, cone_ok == 30 and sf_ok == 30,
                    f"cone construction {cone_ok}/30, square-free construction {sf_ok}/30")
    assert ok


def test_criterion_8_negative_controls(gamma23, tri333, acceptance):
    L = build_link(DirectedLabeledGraph.lexicographic(cycle(3, 3, 3)), Metric.ISOSCELES)
    s, b = systole(L), oracles.brute_systole(L)
    g, dg = gamma23
    cert = certify_gamma_mn(g, find_full_2path_big_label(g), dg)
    Lg = build_link(dg, Metric.ISOSCELES)
    tampered = []
    for k, a in enumerate(cert.assertions):
        if isinstance(a, (DistanceEquals, DistanceAtLeast)):
            bad = list(cert.assertions)
            bad[k] = replace(a, value=a.value + 1) if isinstance(a, DistanceEquals) else replace(a, bound=10 ** 6)
            tampered.append(verify_certificate(replace(cert, assertions=tuple(bad)), Lg))
    g3, dg3 = tri333
    tri = certify_triangle(g3, dg3, find_triangle(g3))
    L3 = build_link(dg3, Metric.EQUILATERAL)
    k = next(i for i, a in enumerate(tri.assertions) if isinstance(a, DistanceAtLeast))
    bad = list(tri.assertions)
    bad[k] = replace(bad[k], bound=10 ** 6)
    tampered.append(verify_certificate(replace(tri, assertions=tuple(bad)), L3))
    ok = acceptance(8, s == b == 18 and tampered and not any(tampered),
                    f"all-3 triangle isosceles systole {s} (brute force {b}) < 24; "
                    f"{sum(not t for t in tampered)}/{len(tampered)} tampered certificates rejected")
    assert ok
