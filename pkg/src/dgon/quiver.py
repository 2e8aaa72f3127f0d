"""Translation quivers on the two arc models, with DOT and JSON export.

A translation quiver is a plain directed graph together with a bijection
of its vertex set (the translation).  Both arc models produce one: the
tagged m-arcs with the four elementary moves, and the paired m-arcs of
the 2N-gon with the direct move rule.  :func:`verify_translation_iso`
checks that the bridge map identifies the two, arrow for arrow and
commuting with the translations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .polygon import Model, PairedArc, format_arc, m_arcs, move_successors, tau
from .punctured import (
    TaggedArc,
    format_tagged,
    move_successors_tagged,
    phi,
    tagged_m_arcs,
    tau_tagged,
)


@dataclass(frozen=True)
class TranslationQuiver:
    """Vertices (opaque labels), arrows as index pairs, and a translation.

    Arrows are stored sorted and duplicate-free; the translation is a
    permutation given as an index list.
    """

    vertices: tuple
    arrows: tuple[tuple[int, int], ...]
    translation: tuple[int, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if sorted(self.translation) != list(range(len(self.vertices))):
            raise ValueError("translation is not a permutation of the vertices")
        for s, t in self.arrows:
            if not (0 <= s < len(self.vertices) and 0 <= t < len(self.vertices)):
                raise ValueError(f"arrow ({s},{t}) leaves the vertex range")
        if len(set(self.arrows)) != len(self.arrows):
            raise ValueError("duplicate arrows")
        object.__setattr__(self, "_index", {v: k for k, v in enumerate(self.vertices)})

    def index_of(self, vertex) -> int:
        return self._index[vertex]

    def arrow_labels(self) -> tuple[tuple, ...]:
        return tuple((self.vertices[s], self.vertices[t]) for s, t in self.arrows)

    def is_connected(self) -> bool:
        """Connectivity of the underlying undirected graph."""
        k = len(self.vertices)
        if k == 0:
            return True
        adj: list[list[int]] = [[] for _ in range(k)]
        for s, t in self.arrows:
            adj[s].append(t)
            adj[t].append(s)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == k


def _build(vertices, successors, translate) -> TranslationQuiver:
    index = {v: k for k, v in enumerate(vertices)}
    arrows = sorted(
        (index[v], index[w]) for v in vertices for w in successors(v)
    )
    translation = tuple(index[translate(v)] for v in vertices)
    return TranslationQuiver(tuple(vertices), tuple(arrows), translation)


def build_gamma(model: Model) -> TranslationQuiver:
    """The quiver on tagged m-arcs of the punctured polygon."""
    return _build(
        tagged_m_arcs(model),
        lambda t: move_successors_tagged(model, t),
        lambda t: tau_tagged(model, t),
    )


def build_delta(model: Model, validate: bool = True) -> TranslationQuiver:
    """The quiver on paired m-arcs of the 2N-gon.

    With ``validate`` (the default) the direct move rule is checked
    against the moves transported from the punctured model through
    :func:`dgon.punctured.phi`, which are the authoritative ones.
    """
    q = _build(
        m_arcs(model),
        lambda a: move_successors(model, a),
        lambda a: tau(model, a),
    )
    if validate:
        transported = sorted(
            (q.index_of(phi(model, t)), q.index_of(phi(model, s)))
            for t in tagged_m_arcs(model)
            for s in move_successors_tagged(model, t)
        )
        if tuple(transported) != q.arrows:
            raise RuntimeError(
                f"direct moves disagree with transported moves for n={model.n}, m={model.m}"
            )
    return q


@dataclass(frozen=True)
class IsoCheck:
    """Outcome of the model comparison: a witness map or a counterexample."""

    ok: bool
    mapping: dict[TaggedArc, PairedArc] | None = None
    counterexample: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_translation_iso(model: Model) -> IsoCheck:
    """Check that the bridge map is an isomorphism of translation quivers.

    Verifies bijectivity on vertices, arrow-for-arrow correspondence and
    commutation with the translations; on failure reports the first
    counterexample found.
    """
    gamma = build_gamma(model)
    delta = build_delta(model, validate=False)
    mapping = {t: phi(model, t) for t in gamma.vertices}
    image = set(mapping.values())
    if len(image) != len(gamma.vertices):
        return IsoCheck(False, None, "bridge map is not injective")
    if image != set(delta.vertices):
        missing = next(iter(set(delta.vertices) - image))
        return IsoCheck(False, None, f"vertex {missing} is not in the image")
    d_index = {v: k for k, v in enumerate(delta.vertices)}
    mapped_arrows = sorted(
        (d_index[mapping[gamma.vertices[s]]], d_index[mapping[gamma.vertices[t]]])
        for s, t in gamma.arrows
    )
    if tuple(mapped_arrows) != delta.arrows:
        got, want = set(mapped_arrows), set(delta.arrows)
        s, t = next(iter(got.symmetric_difference(want)))
        return IsoCheck(
            False, None,
            f"arrow mismatch at {delta.vertices[s]} -> {delta.vertices[t]}",
        )
    for t in gamma.vertices:
        if phi(model, tau_tagged(model, t)) != tau(model, phi(model, t)):
            return IsoCheck(False, None, f"translation does not commute at {t}")
    return IsoCheck(True, mapping, None)


def _label(vertex) -> str:
    if isinstance(vertex, PairedArc):
        return format_arc(vertex)
    if isinstance(vertex, TaggedArc):
        return format_tagged(vertex)
    return str(vertex)


def to_dot(q: TranslationQuiver, name: str = "quiver") -> str:
    """DOT text: solid arrows for moves, dashed back-edges for the
    translation.  Output is deterministic for a given quiver."""
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for v in q.vertices:
        lines.append(f'  "{_label(v)}";')
    for s, t in q.arrows:
        lines.append(f'  "{_label(q.vertices[s])}" -> "{_label(q.vertices[t])}";')
    for s, t in enumerate(q.translation):
        lines.append(
            f'  "{_label(q.vertices[s])}" -> "{_label(q.vertices[t])}"'
            " [style=dashed, constraint=false];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(q: TranslationQuiver) -> str:
    """JSON text with keys vertices, arrows, translation, in index order."""
    doc = {
        "vertices": [_label(v) for v in q.vertices],
        "arrows": [list(a) for a in q.arrows],
        "translation": list(q.translation),
    }
    return json.dumps(doc, indent=2) + "\n"
