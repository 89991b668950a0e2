"""Small graph builders shared by the tests."""

from artin_acyl.graph import DirectedLabeledGraph, LabeledGraph


def graph(vertices, *edges) -> LabeledGraph:
    return LabeledGraph.from_edges(list(vertices), edges)


def path(*labels, names=None) -> LabeledGraph:
    vs = names or [f"v{i + 1}" for i in range(len(labels) + 1)]
    return graph(vs, *((vs[i], vs[i + 1], m) for i, m in enumerate(labels)))


def cycle(*labels, names=None) -> LabeledGraph:
    n = len(labels)
    vs = names or [f"v{i + 1}" for i in range(n)]
    return graph(vs, *((vs[i], vs[(i + 1) % n], m) for i, m in enumerate(labels)))


def along(g: LabeledGraph, vs=None) -> DirectedLabeledGraph:
    """Direct consecutive vertices of ``vs`` (default: vertex order) forward, the rest lexicographically."""
    vs = list(vs or g.vertices)
    return DirectedLabeledGraph.from_pairs(g, [(a, b) for a, b in zip(vs, vs[1:]) if g.has_edge(a, b)])


def k23(label_override=None) -> LabeledGraph:
    es = [(a, b, 2) for a in ("a1", "a2") for b in ("b1", "b2", "b3")]
    if label_override:
        es[0] = (*es[0][:2], label_override)
    return graph(["a1", "a2", "b1", "b2", "b3"], *es)
