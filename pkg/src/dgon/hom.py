"""Crossings, distances and perpendicular sets of paired m-arcs.

Two chords cross when their endpoints are four distinct vertices that
alternate around the polygon; two orbits cross when some pair of their
representatives does.  Diameters follow their own rule.  Two diameters
with the same endpoints never cross.  For distinct endpoint sets, reduce
the base offset mod m into 1..m (the would-be distance d): the pair
crosses when d is even for equally coloured diameters and when d is odd
for differently coloured ones.  At level 1 this says exactly that
diameters of different colours and different endpoints cross and nothing
else does; at higher odd levels the even-d same-colour crossings are
essential (without them the coloured diameters would form arbitrarily
large non-crossing families, while a maximal non-crossing set must have
exactly n members).  The rule is parity-stable because m is odd; the
two-diameter rule is meaningless at even level, so all machinery below
(and everything built on it) refuses even m.

For crossing arcs u, v the *distance* d(u, v) is the number of clockwise
boundary steps from an endpoint of u to the first endpoint of v strictly
inside u's span, reduced mod m into 1..m.  It does not depend on the
endpoint of u chosen, nor on the representatives of the orbits (this is
re-checked on every table build and any discrepancy raises instead of
being papered over).  The complement identity d(u,v) + d(v,u) = m + 1
holds for every crossing pair and is enforced by the test-suite.

The perpendicular operators act on :class:`ArcSet`:

* ``right_perp(U)``: arcs u such that every v in U crossing u has d(v, u) > 1;
* ``left_perp(U)``: arcs u such that every v in U crossing u has d(u, v) > 1.

Arcs crossing nothing in U belong to both, vacuously.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .polygon import (
    EvenLevelError,
    Model,
    PairedArc,
    arc_index,
    check_m_arc,
    format_arc,
    m_arcs,
    orbit_chords,
)


def _chords_cross(two_n: int, c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    """Whether concrete chords with distinct endpoints separate each other."""
    x, y = c1
    if x in c2 or y in c2:
        return False
    g = (y - x) % two_n
    inside = sum(1 for w in c2 if 0 < (w - x) % two_n < g)
    return inside == 1


def crossing(model: Model, u: PairedArc, v: PairedArc) -> bool:
    """Whether two paired m-arcs cross.  Symmetric; an orbit never crosses
    itself.  Raises :class:`EvenLevelError` on a two-diameter query with
    even m, where no rule is defined."""
    check_m_arc(model, u)
    check_m_arc(model, v)
    if u.is_diameter and v.is_diameter:
        if not model.torsion_ready:
            raise EvenLevelError(
                "crossing of two diameters is defined only for odd level m"
            )
        if u.a == v.a:
            return False
        d = (v.a - u.a) % model.m
        if d == 0:
            d = model.m
        return (d % 2 == 0) == (u.color == v.color)
    two_n = model.vertex_count
    if u == v:
        return False
    u_chords = orbit_chords(model, u)
    v_chords = orbit_chords(model, v)
    # 180-degree symmetry: fixing one representative of u loses nothing.
    return any(_chords_cross(two_n, u_chords[0], cv) for cv in v_chords)


def _chord_distance(two_n: int, m: int, cu: tuple[int, int], cv: tuple[int, int]) -> int:
    """Distance between concrete crossing chords, in 1..m."""
    p, q = cu
    vals = []
    for start, stop in ((p, q), (q, p)):
        g = (stop - start) % two_n
        inside = [w for w in cv if 0 < (w - start) % two_n < g]
        assert len(inside) == 1, "chords passed to _chord_distance must cross"
        vals.append((inside[0] - start) % two_n % m)
    assert vals[0] == vals[1], "distance must not depend on the chosen endpoint"
    return m if vals[0] == 0 else vals[0]


def distance(model: Model, u: PairedArc, v: PairedArc) -> int | None:
    """d(u, v) in 1..m for crossing arcs, None when they do not cross.

    Computed over every pair of crossing representatives; the values must
    agree, otherwise a RuntimeError escalates the discrepancy.
    """
    if not model.torsion_ready:
        raise EvenLevelError("distances are defined only for odd level m")
    check_m_arc(model, u)
    check_m_arc(model, v)
    if u.is_diameter and v.is_diameter:
        if not crossing(model, u, v):
            return None
    two_n, m = model.vertex_count, model.m
    vals = set()
    for cu in orbit_chords(model, u):
        for cv in orbit_chords(model, v):
            if _chords_cross(two_n, cu, cv):
                vals.add(_chord_distance(two_n, m, cu, cv))
    if not vals:
        return None
    if len(vals) > 1:
        raise RuntimeError(
            f"representative-dependent distance between {format_arc(u)} and "
            f"{format_arc(v)}: {sorted(vals)}"
        )
    return vals.pop()


def ext_nonzero(model: Model, u: PairedArc, v: PairedArc, degree: int) -> bool:
    """Whether the pair carries an extension in exactly this degree, i.e.
    the arcs cross at distance ``degree``.  Degree must lie in 1..m."""
    if not 1 <= degree <= model.m:
        raise ValueError(f"degree must be in 1..{model.m}, got {degree}")
    return distance(model, u, v) == degree


@dataclass(frozen=True)
class ArcSet:
    """A set of paired m-arcs as a bit-vector over the frozen arc index.

    Because the members are whole 180-degree orbits, every ArcSet is
    automatically invariant under rotation by 180 degrees.  Instances are
    immutable and hashable; set operations return fresh values.
    """

    model: Model
    bits: int = 0

    @classmethod
    def empty(cls, model: Model) -> "ArcSet":
        return cls(model, 0)

    @classmethod
    def full(cls, model: Model) -> "ArcSet":
        return cls(model, (1 << len(m_arcs(model))) - 1)

    @classmethod
    def of(cls, model: Model, arcs: Iterable[PairedArc]) -> "ArcSet":
        index = arc_index(model)
        bits = 0
        for pa in arcs:
            try:
                bits |= 1 << index[pa]
            except KeyError:
                raise ValueError(
                    f"{format_arc(pa)} is not an m-arc of n={model.n}, m={model.m}"
                ) from None
        return cls(model, bits)

    def arcs(self) -> tuple[PairedArc, ...]:
        universe = m_arcs(self.model)
        return tuple(universe[k] for k in _iter_bits(self.bits))

    def add(self, pa: PairedArc) -> "ArcSet":
        return ArcSet(self.model, self.bits | 1 << arc_index(self.model)[pa])

    def __contains__(self, pa: PairedArc) -> bool:
        k = arc_index(self.model).get(pa)
        return k is not None and self.bits >> k & 1 == 1

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[PairedArc]:
        return iter(self.arcs())

    def __or__(self, other: "ArcSet") -> "ArcSet":
        self._check_same_model(other)
        return ArcSet(self.model, self.bits | other.bits)

    def __and__(self, other: "ArcSet") -> "ArcSet":
        self._check_same_model(other)
        return ArcSet(self.model, self.bits & other.bits)

    def __sub__(self, other: "ArcSet") -> "ArcSet":
        self._check_same_model(other)
        return ArcSet(self.model, self.bits & ~other.bits)

    def issubset(self, other: "ArcSet") -> bool:
        self._check_same_model(other)
        return self.bits & ~other.bits == 0

    def _check_same_model(self, other: "ArcSet") -> None:
        if self.model != other.model:
            raise ValueError("ArcSets belong to different models")

    def __str__(self) -> str:
        return "{" + ", ".join(format_arc(a) for a in self.arcs()) + "}"


def _iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


iter_bits = _iter_bits


@dataclass(frozen=True)
class PairTables:
    """Precomputed crossing/distance data over the arc index of a model.

    ``cross[i]`` is the bitmask of arcs crossing arc i; ``dist[i][j]`` is
    d(arc_i, arc_j) or 0 when they do not cross; ``rp_blocker[u]`` masks
    the arcs v with d(v, u) = 1 (the witnesses expelling u from a right
    perp) and ``lp_blocker[u]`` those with d(u, v) = 1.
    """

    model: Model
    cross: tuple[int, ...]
    dist: tuple[tuple[int, ...], ...]
    rp_blocker: tuple[int, ...]
    lp_blocker: tuple[int, ...]


@lru_cache(maxsize=None)
def tables(model: Model) -> PairTables:
    """Build (and cache) the pair tables; odd level only."""
    if not model.torsion_ready:
        raise EvenLevelError(
            "pair tables (and all torsion machinery) require an odd level m"
        )
    universe = m_arcs(model)
    k = len(universe)
    cross = [0] * k
    dist = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            d_ij = distance(model, universe[i], universe[j])
            if d_ij is None:
                continue
            d_ji = distance(model, universe[j], universe[i])
            cross[i] |= 1 << j
            cross[j] |= 1 << i
            dist[i][j] = d_ij
            dist[j][i] = d_ji
    rp_blocker = [0] * k
    lp_blocker = [0] * k
    for u in range(k):
        for v in _iter_bits(cross[u]):
            if dist[v][u] == 1:
                rp_blocker[u] |= 1 << v
            if dist[u][v] == 1:
                lp_blocker[u] |= 1 << v
    return PairTables(
        model,
        tuple(cross),
        tuple(tuple(row) for row in dist),
        tuple(rp_blocker),
        tuple(lp_blocker),
    )


def right_perp(s: ArcSet) -> ArcSet:
    """Arcs whose every crossing with a member of s happens at distance
    greater than 1 measured from the member."""
    t = tables(s.model)
    bits = 0
    for u, blocker in enumerate(t.rp_blocker):
        if s.bits & blocker == 0:
            bits |= 1 << u
    return ArcSet(s.model, bits)


def left_perp(s: ArcSet) -> ArcSet:
    """Arcs whose every crossing with a member of s happens at distance
    greater than 1 measured from the arc itself."""
    t = tables(s.model)
    bits = 0
    for u, blocker in enumerate(t.lp_blocker):
        if s.bits & blocker == 0:
            bits |= 1 << u
    return ArcSet(s.model, bits)
