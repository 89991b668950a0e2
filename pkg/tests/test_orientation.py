import itertools

import pytest

from artin_acyl.errors import PreconditionError
from artin_acyl.graph import DirectedLabeledGraph, is_almost_large_type
from artin_acyl.orientation import (
    DEFAULT_PATTERNS,
    OrientationPatternTable,
    find_appropriate_direction,
    iter_appropriate_directions,
    orient_cor13,
    orient_search,
    orient_squarefree,
    validate_orientation,
)
from helpers import cycle, graph

D = DirectedLabeledGraph.from_pairs


def test_cyclic_triangle_valid(tri333):
    _, dg = tri333
    rep = validate_orientation(dg)
    assert rep.verdict
    assert rep.cycles[0].pattern == "cyclic-triangle"


def test_transitive_triangle_invalid():
    g = cycle(3, 3, 3)
    dg = D(g, [("v1", "v2"), ("v2", "v3"), ("v1", "v3")])
    rep = validate_orientation(dg)
    assert not rep.verdict
    assert rep.cycles[0].reason == "3-cycle is not cyclically directed"


def test_square_opposite_antialigned():
    g = cycle(3, 2, 3, 2)
    # traversal v1 v2 v3 v4: v1v2 forward, v3v4 backward
    dg = D(g, [("v1", "v2"), ("v4", "v3")])
    rep = validate_orientation(dg)
    assert rep.verdict and rep.cycles[0].pattern == "opposite-antialigned"


def test_square_opposite_aligned_rejected():
    g = cycle(3, 2, 3, 2)
    dg = D(g, [("v1", "v2"), ("v3", "v4")])
    assert not validate_orientation(dg).verdict


def test_square_adjacent_head_to_tail():
    g = cycle(3, 3, 2, 2)
    assert validate_orientation(D(g, [("v1", "v2"), ("v2", "v3")])).verdict
    assert not validate_orientation(D(g, [("v1", "v2"), ("v3", "v2")])).verdict


def test_unconstrained_edges_free():
    g = cycle(3, 3, 2, 2)
    for flips in itertools.product((False, True), repeat=2):
        pairs = [("v1", "v2"), ("v2", "v3")]
        pairs.append(("v4", "v3") if flips[0] else ("v3", "v4"))
        pairs.append(("v1", "v4") if flips[1] else ("v4", "v1"))
        assert validate_orientation(D(g, pairs)).verdict


def test_precondition():
    with pytest.raises(PreconditionError) as exc:
        validate_orientation(DirectedLabeledGraph.lexicographic(cycle(2, 2, 2, 2)))
    assert exc.value.reason == "not almost large type"


def test_reflection_switch():
    strict = OrientationPatternTable(DEFAULT_PATTERNS.triangles, DEFAULT_PATTERNS.squares, allow_reflection=False)
    g = cycle(3, 3, 3)
    forward = D(g, [("v1", "v2"), ("v2", "v3"), ("v3", "v1")])
    backward = D(g, [("v2", "v1"), ("v3", "v2"), ("v1", "v3")])
    assert validate_orientation(forward, strict).verdict
    assert not validate_orientation(backward, strict).verdict
    assert validate_orientation(backward).verdict


def test_invariant_under_renaming():
    g = cycle(3, 2, 3, 2, names=["a", "b", "c", "d"])
    h = cycle(3, 2, 3, 2, names=["w", "x", "y", "z"])
    ren = dict(zip("abcd", "wxyz"))
    for dg in [D(g, p) for p in ([("a", "b"), ("d", "c")], [("a", "b"), ("c", "d")])]:
        image = D(h, [(ren[s], ren[t]) for _, s, t in dg.directed_edges()])
        assert validate_orientation(dg).verdict == validate_orientation(image).verdict


class TestCor13:
    def test_cone_over_edge_is_cyclic(self):
        g = graph(["o", "a", "b"], ("o", "a", 3), ("o", "b", 3), ("a", "b", 3))
        dg = orient_cor13(g, "o")
        assert dg.goes("a", "b") and dg.goes("o", "a") and dg.goes("b", "o")
        assert validate_orientation(dg).verdict

    def test_cone_over_isolated_vertices(self):
        g = graph(["o", "a", "b"], ("o", "a", 2), ("o", "b", 2))
        assert validate_orientation(orient_cor13(g, "o")).verdict

    def test_join_with_isolated_and_bipartite_parts(self):
        # apex over {i1, i2} isolated and a 3-path a-b-c-d
        g = graph(
            ["o", "i1", "i2", "a", "b", "c", "d"],
            ("o", "i1", 2), ("o", "i2", 3),
            ("o", "a", 3), ("o", "b", 4), ("o", "c", 3), ("o", "d", 5),
            ("a", "b", 3), ("b", "c", 4), ("c", "d", 3),
        )
        assert validate_orientation(orient_cor13(g, "o")).verdict

    @pytest.mark.parametrize("g, apex, reason", [
        (graph(["o", "a", "b"], ("o", "a", 3), ("a", "b", 3)), "o", "not a cone"),
        (graph(["o", "a", "b", "c"], ("o", "a", 3), ("o", "b", 3), ("o", "c", 3),
               ("a", "b", 3), ("b", "c", 3), ("a", "c", 3)), "o", "base not bipartite"),
        (graph(["o", "a", "b", "c", "d"], *[("o", v, 3) for v in "abcd"],
               ("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("a", "d", 3)), "o", "base not square-free"),
        (graph(["o", "a", "b"], ("o", "a", 3), ("o", "b", 3), ("a", "b", 2)), "o", "label condition fails"),
        (graph(["o", "a", "b"], ("o", "a", 2), ("o", "b", 3), ("a", "b", 3)), "o", "label condition fails"),
    ])
    def test_named_violations(self, g, apex, reason):
        with pytest.raises(PreconditionError) as exc:
            orient_cor13(g, apex)
        assert exc.value.reason == reason


class TestSquareFree:
    def test_bowtie(self):
        g = graph(["c", "a", "b", "d", "e"], *[(u, v, 3) for u, v in ["ca", "cb", "ab", "cd", "ce", "de"]])
        dg = orient_squarefree(g)
        rep = validate_orientation(dg)
        assert rep.verdict and len(rep.cycles) == 2

    def test_triangle_free_is_lexicographic(self):
        g = cycle(2, 3, 2, 3, 2)
        assert orient_squarefree(g) == DirectedLabeledGraph.lexicographic(g)

    def test_square_rejected(self):
        with pytest.raises(PreconditionError, match="not square-free"):
            orient_squarefree(cycle(3, 3, 3, 3))


class TestSearch:
    def test_triangle(self):
        dg = orient_search(cycle(3, 3, 3))
        assert validate_orientation(dg).verdict
        assert dg.goes("v1", "v2") and dg.goes("v2", "v3") and dg.goes("v3", "v1")

    def test_adjacent_big_edges_head_to_tail(self):
        dg = orient_search(cycle(3, 3, 2, 2))
        assert dg.goes("v1", "v2") and dg.goes("v2", "v3")

    def test_none_when_impossible(self):
        # K4 with all labels 3: every 4-cycle and every triangle constrained
        g = graph("abcd", *[(u, v, 3) for u, v in ["ab", "ac", "ad", "bc", "bd", "cd"]])
        assert is_almost_large_type(g)
        assert orient_search(g) is None
        assert find_appropriate_direction(g) is None

    def test_enumeration_counts_triangle(self):
        assert len(list(iter_appropriate_directions(cycle(3, 3, 3)))) == 2

    def test_enumeration_all_valid(self):
        g = graph(["o", "a", "b", "c"], ("o", "a", 3), ("o", "b", 3), ("o", "c", 3), ("a", "b", 3), ("b", "c", 3))
        found = list(iter_appropriate_directions(g))
        assert found and all(validate_orientation(dg).verdict for dg in found)
        assert len(set(found)) == len(found)

    def test_find_prefers_constructions(self):
        cone = graph(["o", "a", "b"], ("o", "a", 3), ("o", "b", 3), ("a", "b", 3))
        assert find_appropriate_direction(cone)[1] == "cone-construction"
        dumbbell = graph("abcdef", *[(u, v, 3) for u, v in ["ab", "bc", "ac", "cd", "de", "ef", "df"]])
        assert find_appropriate_direction(dumbbell)[1] == "square-free-construction"
        assert find_appropriate_direction(cycle(3, 3, 3, 3))[1] == "search"
