"""Arc combinatorics in a regular 2N-gon with doubled diameters.

The playing field is a regular polygon P with ``2N`` vertices, where
``N = m*(n-1) + 1`` for a rank ``n >= 3`` and a level ``m >= 1``.  Vertices
are labelled 1..2N clockwise and all vertex arithmetic is modulo 2N.

Chords of P come in two flavours:

* non-diameter arcs ``{a, b}`` with non-neighbouring, non-opposite
  endpoints.  Each such arc has a partner obtained by rotating 180
  degrees, and the unordered pair (the *orbit*) is the basic object here.
* diameters ``{i, i+N}``, which are their own 180-degree partner and are
  kept in two colours, red and green, as two distinct objects.

An *m-arc* is a non-diameter arc whose clockwise endpoint gap is
congruent to 1 mod m, or any coloured diameter.  (Because 2N = 2 mod m,
the gap condition does not depend on the direction it is measured in.)
The m-arcs index the vertex set of the translation quiver built in
:mod:`dgon.quiver`; their position in :func:`m_arcs` is the permanent
index used by the bit-vector sets of :mod:`dgon.hom`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

RED = "red"
GREEN = "green"

_OTHER_COLOR = {RED: GREEN, GREEN: RED}


class EvenLevelError(ValueError):
    """An operation that needs an odd level m was asked to run at an even one."""


@dataclass(frozen=True)
class Model:
    """The pair (n, m) plus the derived polygon sizes.

    ``n`` is the rank (at least 3; n = 3 is accepted, although the
    combinatorics then coincides with the triangle-free A_3 case) and
    ``m`` is the level.  ``N = m*(n-1) + 1`` and the polygon has ``2N``
    vertices.  The torsion machinery (crossing distances, Ptolemy
    diagrams, perpendiculars) is only available when m is odd; see
    :attr:`torsion_ready`.
    """

    n: int
    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not isinstance(self.m, int):
            raise ValueError("rank and level must be integers")
        if self.n < 3:
            raise ValueError(f"rank n must be >= 3, got {self.n}")
        if self.m < 1:
            raise ValueError(f"level m must be >= 1, got {self.m}")

    @property
    def N(self) -> int:
        return self.m * (self.n - 1) + 1

    @property
    def vertex_count(self) -> int:
        return 2 * self.N

    @property
    def torsion_ready(self) -> bool:
        """Whether the level is odd, i.e. the torsion machinery applies."""
        return self.m % 2 == 1

    def normalize(self, v: int) -> int:
        """Map an arbitrary integer vertex label back into 1..2N."""
        return (v - 1) % (2 * self.N) + 1

    def gap(self, x: int, y: int) -> int:
        """Clockwise boundary steps from x to y, in 0..2N-1."""
        return (y - x) % (2 * self.N)


def make_model(n: int, m: int) -> Model:
    """Validate (n, m) and return the model constants."""
    return Model(n, m)


@dataclass(frozen=True)
class PairedArc:
    """A 180-degree orbit of a non-diameter arc, or a coloured diameter.

    Non-diameters store the canonical representative: ``a < b`` with
    ``2 <= b - a <= N - 1``, lexicographically least among the (at most
    two) admissible representatives of the orbit, and ``color`` is None.
    Diameters store ``a`` in 1..N, ``b = a + N`` and a colour.
    """

    a: int
    b: int
    color: str | None = None

    @property
    def is_diameter(self) -> bool:
        return self.color is not None

    def __str__(self) -> str:
        return format_arc(self)

    def __repr__(self) -> str:
        return f"PairedArc({format_arc(self)!r})"


def _sorted_chord(model: Model, x: int, y: int) -> tuple[int, int]:
    x, y = model.normalize(x), model.normalize(y)
    return (x, y) if x < y else (y, x)


def arc(model: Model, x: int, y: int) -> PairedArc:
    """Canonical orbit of the non-diameter chord {x, y}.

    Any representative is accepted, including the rotated partner.
    Degenerate chords (equal, neighbouring or opposite endpoints) are
    rejected; opposite endpoints need :func:`diameter` and a colour.
    """
    N = model.N
    g = model.gap(x, y)
    if g == 0:
        raise ValueError(f"degenerate chord: {x} and {y} coincide")
    if g in (1, 2 * N - 1):
        raise ValueError(f"chord ({x},{y}) joins neighbouring vertices")
    if g == N:
        raise ValueError(
            f"chord ({x},{y}) is a diameter; use diameter() and pick a colour"
        )
    candidates = []
    for rep in (_sorted_chord(model, x, y), _sorted_chord(model, x + N, y + N)):
        if rep[1] - rep[0] <= N - 1:
            candidates.append(rep)
    a, b = min(candidates)
    return PairedArc(a, b)


def diameter(model: Model, i: int, color: str) -> PairedArc:
    """The coloured diameter with base vertex i (any representative of i)."""
    if color not in (RED, GREEN):
        raise ValueError(f"diameter colour must be {RED!r} or {GREEN!r}, got {color!r}")
    i = model.normalize(i)
    base = i if i <= model.N else i - model.N
    return PairedArc(base, base + model.N, color)


def is_m_arc(model: Model, pa: PairedArc) -> bool:
    """Whether the paired arc is an m-arc: diameters always, non-diameters
    exactly when the endpoint gap is 1 mod m."""
    if pa.is_diameter:
        return True
    return (pa.b - pa.a) % model.m == 1 % model.m


@lru_cache(maxsize=None)
def m_arcs(model: Model) -> tuple[PairedArc, ...]:
    """All m-arcs of the model in the frozen index order.

    Non-diameters come first, lexicographically by (a, b); then the
    diameters by (base, red before green).  The position of an arc in
    this tuple is its permanent bit-vector index, so the order must
    never change.  The length is always n*N.
    """
    N = model.N
    out: list[PairedArc] = []
    for a in range(1, 2 * N + 1):
        for b in range(a + 2, min(a + N, 2 * N) + 1):
            if b - a > N - 1:
                continue
            if (b - a) % model.m != 1 % model.m:
                continue
            pa = PairedArc(a, b)
            if arc(model, a, b) == pa:  # keep canonical representatives only
                out.append(pa)
    for i in range(1, N + 1):
        out.append(PairedArc(i, i + N, RED))
        out.append(PairedArc(i, i + N, GREEN))
    return tuple(out)


@lru_cache(maxsize=None)
def arc_index(model: Model) -> dict[PairedArc, int]:
    """Map from each m-arc to its frozen index in :func:`m_arcs`."""
    return {pa: k for k, pa in enumerate(m_arcs(model))}


def check_m_arc(model: Model, pa: PairedArc) -> PairedArc:
    """Return pa unchanged if it is a canonical m-arc of the model, else raise."""
    if pa not in arc_index(model):
        raise ValueError(f"{format_arc(pa)} is not a canonical m-arc of n={model.n}, m={model.m}")
    return pa


def orbit_chords(model: Model, pa: PairedArc) -> tuple[tuple[int, int], ...]:
    """The concrete chords in the orbit, as sorted endpoint pairs.

    Two chords for a non-diameter orbit, one for a diameter (a diameter is
    its own partner).
    """
    if pa.is_diameter:
        return ((pa.a, pa.b),)
    return ((pa.a, pa.b), _sorted_chord(model, pa.a + model.N, pa.b + model.N))


def tau(model: Model, pa: PairedArc) -> PairedArc:
    """The translation: rotate by m vertices counterclockwise.

    Diameters keep their colour when m is even and swap it when m is odd.
    """
    m = model.m
    if pa.is_diameter:
        base = (pa.a - m - 1) % model.N + 1
        color = pa.color if m % 2 == 0 else _OTHER_COLOR[pa.color]
        return PairedArc(base, base + model.N, color)
    return arc(model, pa.a - m, pa.b - m)


def move_successors(model: Model, pa: PairedArc) -> tuple[PairedArc, ...]:
    """All m-arcs reachable from pa by one elementary clockwise move.

    A move advances one endpoint by m steps clockwise so that the two
    arcs cut an (m+2)-gon off the boundary.  Advancing onto the opposite
    vertex produces both coloured diameters; from a diameter, advancing
    either endpoint lands in the same orbit, so a diameter has exactly
    one successor.  This direct rule is validated against the transported
    moves of the punctured model (the authoritative ones) when quivers
    are built.
    """
    m, N = model.m, model.N
    if pa.is_diameter:
        return (arc(model, pa.a + m, pa.b),)
    out: list[PairedArc] = []
    g = pa.b - pa.a
    if g - m >= 2:
        out.append(arc(model, pa.a + m, pa.b))
    if g + m == N:
        out.append(diameter(model, pa.a, RED))
        out.append(diameter(model, pa.a, GREEN))
    elif g + m <= N - 1:
        out.append(arc(model, pa.a, pa.b + m))
    return tuple(out)


_ARC_RE = re.compile(r"^(\d+)-(\d+)$")
_DIAM_RE = re.compile(r"^d(\d+)([rg])$")


def format_arc(pa: PairedArc) -> str:
    """Literal form: "a-b" for a non-diameter orbit, "dIr"/"dIg" for diameters."""
    if pa.is_diameter:
        return f"d{pa.a}{'r' if pa.color == RED else 'g'}"
    return f"{pa.a}-{pa.b}"


def parse_arc(model: Model, text: str) -> PairedArc:
    """Parse an arc literal, canonicalizing non-canonical representatives.

    Accepts "a-b" with any representative of a non-diameter orbit and
    "dIr"/"dIg" with any base representative for a diameter.  Malformed
    text, out-of-range vertices and non-m-arcs raise ValueError naming
    the offending token.
    """
    text = text.strip()
    mm = _DIAM_RE.match(text)
    if mm:
        i = int(mm.group(1))
        if not 1 <= i <= model.vertex_count:
            raise ValueError(f"diameter base out of range in {text!r}")
        return diameter(model, i, RED if mm.group(2) == "r" else GREEN)
    mm = _ARC_RE.match(text)
    if mm:
        x, y = int(mm.group(1)), int(mm.group(2))
        for v in (x, y):
            if not 1 <= v <= model.vertex_count:
                raise ValueError(f"vertex {v} out of range 1..{model.vertex_count} in {text!r}")
        try:
            pa = arc(model, x, y)
        except ValueError as exc:
            raise ValueError(f"bad arc literal {text!r}: {exc}") from None
        if not is_m_arc(model, pa):
            raise ValueError(f"{text!r} is not an m-arc for m={model.m}")
        return pa
    raise ValueError(f"unrecognized arc literal {text!r}")
