"""Tagged arcs in a once-punctured N-gon.

The second geometric incarnation of the same combinatorics: a punctured
regular polygon with N vertices, labelled 1..N clockwise, all vertex
arithmetic modulo N.  A plain arc ``i -> j`` runs clockwise from i to j
(so ``(i, j)`` and ``(j, i)`` are different arcs) and needs ``j`` distinct
from i and from its clockwise neighbour.  When both endpoints coincide
the arc wraps the puncture and carries one of two tags, ``+`` or ``-``.

The map :func:`phi` identifies tagged m-arcs here with the paired arcs of
:mod:`dgon.polygon`; it is the normative bridge used to validate the
2N-gon move rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polygon import GREEN, RED, Model, PairedArc, arc, diameter

PLUS = "+"
MINUS = "-"

_OTHER_TAG = {PLUS: MINUS, MINUS: PLUS}


@dataclass(frozen=True)
class TaggedArc:
    """A plain clockwise arc ``i -> j`` (tag None) or a tagged loop at i."""

    i: int
    j: int
    tag: str | None = None

    @property
    def is_loop(self) -> bool:
        return self.tag is not None

    def __str__(self) -> str:
        return format_tagged(self)

    def __repr__(self) -> str:
        return f"TaggedArc({format_tagged(self)!r})"


def _norm(model: Model, v: int) -> int:
    return (v - 1) % model.N + 1


def tagged_arc(model: Model, i: int, j: int) -> TaggedArc:
    """The plain arc from i clockwise to j (endpoints taken mod N)."""
    i, j = _norm(model, i), _norm(model, j)
    if j == i:
        raise ValueError("coincident endpoints make a loop; use tagged_loop()")
    if j == _norm(model, i + 1):
        raise ValueError(f"arc ({i},{j}) ends at the clockwise neighbour of its start")
    return TaggedArc(i, j)


def tagged_loop(model: Model, i: int, tag: str) -> TaggedArc:
    if tag not in (PLUS, MINUS):
        raise ValueError(f"loop tag must be {PLUS!r} or {MINUS!r}, got {tag!r}")
    i = _norm(model, i)
    return TaggedArc(i, i, tag)


def is_tagged_m_arc(model: Model, t: TaggedArc) -> bool:
    """Loops always; plain arcs exactly when the clockwise distance i -> j
    is 1 mod m."""
    if t.is_loop:
        return True
    return (t.j - t.i) % model.N % model.m == 1 % model.m


@lru_cache(maxsize=None)
def tagged_m_arcs(model: Model) -> tuple[TaggedArc, ...]:
    """All tagged m-arcs: plain arcs lexicographically by (i, j), then the
    loops by (i, tag) with + before -.  Length is n*N."""
    N = model.N
    out = [
        TaggedArc(i, j)
        for i in range(1, N + 1)
        for j in range(1, N + 1)
        if j not in (i, i % N + 1) and (j - i) % N % model.m == 1 % model.m
    ]
    for i in range(1, N + 1):
        out.append(TaggedArc(i, i, PLUS))
        out.append(TaggedArc(i, i, MINUS))
    return tuple(out)


def tau_tagged(model: Model, t: TaggedArc) -> TaggedArc:
    """Rotate by m vertices counterclockwise; loops flip their tag when m
    is odd and keep it when m is even."""
    m = model.m
    i = _norm(model, t.i - m)
    if t.is_loop:
        tag = t.tag if m % 2 == 0 else _OTHER_TAG[t.tag]
        return TaggedArc(i, i, tag)
    return TaggedArc(i, _norm(model, t.j - m))


def move_successors_tagged(model: Model, t: TaggedArc) -> tuple[TaggedArc, ...]:
    """The elementary clockwise moves out of a tagged m-arc.

    Four shapes, all with endpoints advanced by m mod N: the far endpoint
    of a plain arc advances (landing on the start turns the arc into both
    tagged loops), the start of a plain arc advances, and a loop opens up
    into the plain arc from i+m back to i (from either tag).  Only valid
    m-arcs are emitted.
    """
    m = model.m
    if t.is_loop:
        j = _norm(model, t.i + m)
        succ = TaggedArc(j, t.i)
        return (succ,) if _is_valid_plain(model, succ) else ()
    out: list[TaggedArc] = []
    k = _norm(model, t.j + m)
    if k == t.i:
        out.append(TaggedArc(t.i, t.i, PLUS))
        out.append(TaggedArc(t.i, t.i, MINUS))
    else:
        cand = TaggedArc(t.i, k)
        if _is_valid_plain(model, cand):
            out.append(cand)
    k = _norm(model, t.i + m)
    if k != t.j:
        cand = TaggedArc(k, t.j)
        if _is_valid_plain(model, cand):
            out.append(cand)
    return tuple(out)


def _is_valid_plain(model: Model, t: TaggedArc) -> bool:
    return t.j not in (t.i, _norm(model, t.i + 1)) and is_tagged_m_arc(model, t)


def phi(model: Model, t: TaggedArc) -> PairedArc:
    """The bijection from tagged m-arcs onto paired m-arcs of the 2N-gon.

    A plain arc maps to the orbit of the chord with the same clockwise
    span; a + loop maps to the red diameter at its basepoint and a - loop
    to the green one.
    """
    if t.is_loop:
        return diameter(model, t.i, RED if t.tag == PLUS else GREEN)
    if t.i < t.j:
        return arc(model, t.i, t.j)
    return arc(model, t.i, t.j + model.N)


def format_tagged(t: TaggedArc) -> str:
    """Literal form: "i>j" for plain arcs, "i+"/"i-" for tagged loops."""
    if t.is_loop:
        return f"{t.i}{t.tag}"
    return f"{t.i}>{t.j}"
