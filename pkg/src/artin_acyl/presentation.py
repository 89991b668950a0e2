"""Standard and Brady-McCammond presentations of an Artin-Tits group.

Words are tuples of ``(generator, exponent)`` letters with exponent +1 or -1.
The BM presentation trades each braid relation of length ``m`` for ``m``
triangular relations ``x = a b`` in the auxiliary generators

    x[u--v]            one per edge
    alpha[u--v][i]     i = 3..m, only for edges with m >= 3

where ``u--v`` is the canonical edge key (endpoints in vertex order).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import UnknownGeneratorError
from .graph import DirectedLabeledGraph, Edge, LabeledGraph

Letter = tuple[str, int]
Word = tuple[Letter, ...]


def word(*gens: str) -> Word:
    """Positive word; a trailing ``'`` on a name marks an inverse letter."""
    return tuple((g[:-1], -1) if g.endswith("'") else (g, 1) for g in gens)


def inverse(w: Sequence[Letter]) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def free_reduce(w: Iterable[Letter]) -> Word:
    out: list[Letter] = []
    for g, e in w:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def cyclic_reduce(w: Iterable[Letter]) -> Word:
    r = free_reduce(w)
    i, j = 0, len(r)
    while j - i >= 2 and r[i] == (r[j - 1][0], -r[j - 1][1]):
        i += 1
        j -= 1
    return r[i:j]


def same_relator(u: Sequence[Letter], v: Sequence[Letter]) -> bool:
    """True when ``u`` is a cyclic rotation of ``v`` or of its inverse, after cyclic reduction.

    Such relators have the same normal closure.
    """
    a = cyclic_reduce(u)
    for b in (cyclic_reduce(v), cyclic_reduce(inverse(v))):
        if len(a) == len(b) and (not a or any(b[k:] + b[:k] == a for k in range(len(b)))):
            return True
    return False


def format_word(w: Sequence[Letter]) -> str:
    if not w:
        return "1"
    return " ".join(g if e == 1 else f"{g}^-1" for g, e in w)


def word_to_json(w: Sequence[Letter]) -> list[dict]:
    return [{"gen": g, "exp": e} for g, e in w]


def word_from_json(items) -> Word:
    return tuple((d["gen"], int(d["exp"])) for d in items)


def alternating(a: str, b: str, length: int) -> Word:
    return tuple((a if i % 2 == 0 else b, 1) for i in range(length))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        gens = set(self.generators)
        for left, right in self.relations:
            for g, _ in left + right:
                if g not in gens:
                    raise UnknownGeneratorError(g)

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relations": [
                {"left": word_to_json(left), "right": word_to_json(right)}
                for left, right in self.relations
            ],
        }

    def format(self) -> str:
        rels = ", ".join(f"{format_word(a)} = {format_word(b)}" for a, b in self.relations)
        return f"< {', '.join(self.generators)} | {rels} >"


def _directed_edges(g: LabeledGraph | DirectedLabeledGraph) -> list[tuple[Edge, str, str]]:
    if isinstance(g, DirectedLabeledGraph):
        return list(g.directed_edges())
    return [(e, e.u, e.v) for e in g.edges]


def standard_presentation(g: LabeledGraph | DirectedLabeledGraph) -> Presentation:
    base = g.base if isinstance(g, DirectedLabeledGraph) else g
    rels = tuple(
        (alternating(s, t, e.label), alternating(t, s, e.label)) for e, s, t in _directed_edges(g)
    )
    return Presentation(base.vertices, rels)


def x_name(key: str) -> str:
    return f"x[{key}]"


def alpha_name(key: str, i: int) -> str:
    return f"alpha[{key}][{i}]"


def edge_cycle(e: Edge, s: str, t: str) -> list[str]:
    """``s, t, alpha_3, ..., alpha_m, s``: consecutive pairs multiply to ``x_e``."""
    if e.label == 2:
        return [s, t, s]
    return [s, t, *(alpha_name(e.key, i) for i in range(3, e.label + 1)), s]


@dataclass(frozen=True, eq=False)
class BMPresentation(Presentation):
    """BM presentation plus the bookkeeping needed to expand its generators."""

    graph: DirectedLabeledGraph | None = None

    @cached_property
    def definitions(self) -> dict[str, Word]:
        """Each generator as a freely reduced word over the vertices."""
        defs: dict[str, Word] = {v: ((v, 1),) for v in self.graph.base.vertices}
        for e, s, t in self.graph.directed_edges():
            x = free_reduce(((s, 1), (t, 1)))
            defs[x_name(e.key)] = x
            prev = ((t, 1),)
            for i in range(3, e.label + 1):
                cur = free_reduce(inverse(prev) + x)
                defs[alpha_name(e.key, i)] = cur
                prev = cur
        return defs


def bm_presentation(dg: DirectedLabeledGraph) -> BMPresentation:
    g = dg.base
    xs = [x_name(e.key) for e in g.edges]
    alphas = [alpha_name(e.key, i) for e in g.edges for i in range(3, e.label + 1)]
    gens = (*g.vertices, *xs, *alphas)
    if len(set(gens)) != len(gens):
        raise ValueError("vertex names collide with auxiliary generator names")
    rels = []
    for e, s, t in dg.directed_edges():
        x = ((x_name(e.key), 1),)
        cyc = edge_cycle(e, s, t)
        if e.label == 2:
            pairs = [(s, t), (t, s)]
        else:
            pairs = list(zip(cyc, cyc[1:]))
        rels.extend((x, ((a, 1), (b, 1))) for a, b in pairs)
    return BMPresentation(gens, tuple(rels), dg)


def expand_to_standard(w: Sequence[Letter], dg: DirectedLabeledGraph,
                       bm: BMPresentation | None = None) -> Word:
    defs = (bm or bm_presentation(dg)).definitions
    out: list[Letter] = []
    for g, e in w:
        if g not in defs:
            raise UnknownGeneratorError(g)
        out.extend(defs[g] if e == 1 else inverse(defs[g]))
    return free_reduce(out)


def verify_bm_equivalence(dg: DirectedLabeledGraph) -> bool:
    """Check, edge by edge, that the BM relations encode the braid relation.

    All BM relations but the last one per edge hold by definition of the
    substitution; the last one (``x = alpha_m s``, or ``x = t s`` for
    ``m = 2``) must give the same relator as ``sts... = tst...``.
    """
    bm = bm_presentation(dg)
    defs = bm.definitions
    for e, s, t in dg.directed_edges():
        left, right = bm_closing_relation(e, s, t)
        closing = expand_to_standard(left, dg, bm) + inverse(expand_to_standard(right, dg, bm))
        braid = alternating(s, t, e.label) + inverse(alternating(t, s, e.label))
        if not same_relator(closing, braid):
            return False
        # every other relation must be an identity after substitution
        cyc = edge_cycle(e, s, t)
        pairs = [(s, t)] if e.label == 2 else list(zip(cyc, cyc[1:]))[:-1]
        for a, b in pairs:
            lhs = defs[x_name(e.key)]
            rhs = free_reduce(defs[a] + defs[b])
            if lhs != rhs:
                return False
    return True


def bm_closing_relation(e: Edge, s: str, t: str) -> tuple[Word, Word]:
    x = ((x_name(e.key), 1),)
    if e.label == 2:
        return x, ((t, 1), (s, 1))
    return x, ((alpha_name(e.key, e.label), 1), (s, 1))
