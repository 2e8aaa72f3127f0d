"""Ptolemy diagrams, their completion, and torsion pairs.

A rotation-invariant set X of m-arcs is a *Ptolemy diagram of type D*
when every crossing pair inside X drags the required connecting arcs
into X.  For a crossing pair with representatives alpha = (i, j) and
beta = (k, l) the required arcs are:

* both non-diameters (Pt1): the corner chords (i,k), (i,l), (j,k), (j,l)
  that are m-arcs; a corner joining opposite vertices contributes both
  coloured diameters.
* both diameters (Pt2): the corner chords that are m-arcs.
* one diameter alpha, one non-diameter beta (Pt3): the corner chords
  that are m-arcs and do not cross the partner chord (k+N, l+N), plus
  the diameters based at k and at l in the colour of alpha.

The central fact driving everything here: X is a Ptolemy diagram exactly
when X = left_perp(right_perp(X)), which makes (X, right_perp(X)) a
torsion pair.  The exhaustive and sampled enumerators below are checked
against that fixpoint characterisation by the test-suite.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .hom import (
    ArcSet,
    _chords_cross,
    _iter_bits,
    crossing,
    left_perp,
    right_perp,
    tables,
)
from .polygon import (
    GREEN,
    RED,
    EvenLevelError,
    Model,
    PairedArc,
    arc,
    arc_index,
    check_m_arc,
    diameter,
    format_arc,
    m_arcs,
    orbit_chords,
)

EXHAUSTIVE_CAP_BITS = 20


class NotPtolemyError(ValueError):
    """Raised when an operation needs a Ptolemy diagram but got violations."""

    def __init__(self, message: str, violations):
        super().__init__(message)
        self.violations = violations


def _forced_for_chords(model: Model, ca, color_a, cb, color_b) -> set[PairedArc]:
    """Arcs forced by one crossing pair of concrete chords.

    ``ca``/``cb`` are endpoint pairs, ``color_a``/``color_b`` their
    colours (None for non-diameters).  The chords are assumed to cross.
    """
    two_n, N, m = model.vertex_count, model.N, model.m
    forced: set[PairedArc] = set()
    if color_a is not None and color_b is None:
        # keep alpha the diameter; handled below
        pass
    elif color_b is not None and color_a is None:
        ca, color_a, cb, color_b = cb, color_b, ca, color_a
    diam_filter = None
    if color_a is not None and color_b is None:
        # Pt3: corners must avoid the partner of the non-diameter chord
        partner = tuple(sorted(model.normalize(w + N) for w in cb))
        diam_filter = partner
        for w in cb:
            forced.add(diameter(model, w, color_a))
    for x in ca:
        for y in cb:
            g = (y - x) % two_n
            if g in (0, 1, two_n - 1):
                continue
            if g == N:
                # only Pt1 can produce an opposite corner
                forced.add(diameter(model, x, RED))
                forced.add(diameter(model, x, GREEN))
                continue
            if g % m != 1 % m:
                continue
            if diam_filter is not None and _chords_cross(two_n, (x, y) if x < y else (y, x), diam_filter):
                continue
            forced.add(arc(model, x, y))
    return forced


def forced_arcs(model: Model, u: PairedArc, v: PairedArc) -> ArcSet:
    """The arcs a Ptolemy diagram containing the crossing pair u, v must
    also contain.  Raises on non-crossing input; the result is a union
    over all crossing pairs of representatives and is orbit-closed by
    construction."""
    if not model.torsion_ready:
        raise EvenLevelError("Ptolemy conditions require an odd level m")
    check_m_arc(model, u)
    check_m_arc(model, v)
    two_n = model.vertex_count
    out: set[PairedArc] = set()
    found = False
    if u.is_diameter and v.is_diameter:
        if crossing(model, u, v):
            found = True
            out |= _forced_for_chords(model, (u.a, u.b), u.color, (v.a, v.b), v.color)
    else:
        for cu in orbit_chords(model, u)[:1]:
            for cv in orbit_chords(model, v):
                if _chords_cross(two_n, cu, cv):
                    found = True
                    out |= _forced_for_chords(model, cu, u.color, cv, v.color)
    if not found:
        raise ValueError(
            f"{format_arc(u)} and {format_arc(v)} do not cross; nothing is forced"
        )
    return ArcSet.of(model, out)


@lru_cache(maxsize=None)
def _pair_data(model: Model):
    """For each crossing index pair i < j: (i, j, forced bitmask)."""
    universe = m_arcs(model)
    t = tables(model)
    index = arc_index(model)
    pairs = []
    forced_of: dict[tuple[int, int], int] = {}
    for i in range(len(universe)):
        for j in _iter_bits(t.cross[i]):
            if j <= i:
                continue
            mask = 0
            for pa in forced_arcs(model, universe[i], universe[j]):
                mask |= 1 << index[pa]
            pairs.append((i, j, mask))
            forced_of[(i, j)] = mask
    return tuple(pairs), forced_of


def ptolemy_violations(s: ArcSet) -> list[tuple[tuple[PairedArc, PairedArc], ArcSet]]:
    """Every crossing pair in s whose forced arcs are not all present,
    with the missing arcs, in index order."""
    pairs, _ = _pair_data(s.model)
    universe = m_arcs(s.model)
    bits = s.bits
    out = []
    for i, j, forced in pairs:
        if bits >> i & 1 and bits >> j & 1 and forced & ~bits:
            out.append(
                ((universe[i], universe[j]), ArcSet(s.model, forced & ~bits))
            )
    return out


def is_ptolemy(s: ArcSet) -> bool:
    """Whether s satisfies all three Ptolemy conditions."""
    pairs, _ = _pair_data(s.model)
    bits = s.bits
    for i, j, forced in pairs:
        if bits >> i & 1 and bits >> j & 1 and forced & ~bits:
            return False
    return True


def ptolemy_complete(s: ArcSet) -> ArcSet:
    """The smallest Ptolemy diagram containing s.

    Work-queue closure: each newly added arc enqueues its crossings with
    the current members; a pair's forced set depends only on the pair, so
    each pair is processed at most once and the closure is independent of
    the processing order.
    """
    t = tables(s.model)
    _, forced_of = _pair_data(s.model)
    bits = s.bits
    member_list = list(_iter_bits(bits))
    queue = [
        (i, j)
        for pos, i in enumerate(member_list)
        for j in member_list[pos + 1:]
        if t.cross[i] >> j & 1
    ]
    seen = set(queue)
    while queue:
        i, j = queue.pop()
        new = forced_of[(i, j) if i < j else (j, i)] & ~bits
        for x in _iter_bits(new):
            bits |= 1 << x
            for y in _iter_bits(t.cross[x] & bits):
                key = (x, y) if x < y else (y, x)
                if y != x and key not in seen:
                    seen.add(key)
                    queue.append(key)
    return ArcSet(s.model, bits)


@dataclass(frozen=True)
class TorsionPair:
    """A Ptolemy diagram together with its right perpendicular.

    Invariants (checked by :func:`torsion_pair_of`): the second member is
    right_perp of the first, and the first is left_perp of the second.
    """

    torsion: ArcSet
    torsion_free: ArcSet


def torsion_pair_of(s: ArcSet) -> TorsionPair:
    """Form the torsion pair (s, right_perp(s)) of a Ptolemy diagram.

    Non-Ptolemy input raises :class:`NotPtolemyError` carrying the
    violation list.  The double-perp fixpoint is asserted before
    returning.
    """
    violations = ptolemy_violations(s)
    if violations:
        raise NotPtolemyError(
            f"not a Ptolemy diagram: {len(violations)} violated pair(s)", violations
        )
    free = right_perp(s)
    back = left_perp(free)
    assert back == s, "double-perp fixpoint failed on a Ptolemy diagram"
    return TorsionPair(s, free)


def enumerate_ptolemy_exhaustive(
    model: Model, cap_bits: int = EXHAUSTIVE_CAP_BITS
) -> Iterator[ArcSet]:
    """All Ptolemy diagrams, by increasing bit pattern over the arc index.

    Refuses universes larger than ``cap_bits`` bits; use the closure or
    random strategies there.
    """
    k = len(m_arcs(model))
    if k > cap_bits:
        raise ValueError(
            f"arc universe has {k} bits, above the exhaustive cap {cap_bits}; "
            "use the closure-generated or random-sample strategy instead"
        )
    pairs, _ = _pair_data(model)
    for bits in range(1 << k):
        ok = True
        for i, j, forced in pairs:
            if bits >> i & 1 and bits >> j & 1 and forced & ~bits:
                ok = False
                break
        if ok:
            yield ArcSet(model, bits)


def enumerate_ptolemy_closures(model: Model, max_generators: int) -> Iterator[ArcSet]:
    """Distinct completions of all generator sets with at most
    ``max_generators`` arcs, in first-generated order.

    A sound under-approximation of the full census: every emission is a
    Ptolemy diagram, but diagrams that are not the closure of a small set
    are missed, so counts derived from this stream are lower bounds.
    """
    universe = m_arcs(model)
    index = arc_index(model)
    seen: set[int] = set()
    for size in range(max_generators + 1):
        for combo in itertools.combinations(universe, size):
            gen = 0
            for pa in combo:
                gen |= 1 << index[pa]
            closed = ptolemy_complete(ArcSet(model, gen))
            if closed.bits not in seen:
                seen.add(closed.bits)
                yield closed


def enumerate_ptolemy_random(model: Model, count: int, seed: int) -> Iterator[ArcSet]:
    """Ptolemy diagrams among ``count`` seeded pseudo-random subsets."""
    k = len(m_arcs(model))
    rng = random.Random(seed)
    for _ in range(count):
        s = ArcSet(model, rng.getrandbits(k))
        if is_ptolemy(s):
            yield s


def enumerate_ptolemy(
    model: Model,
    strategy: str = "exhaustive",
    *,
    max_generators: int = 2,
    count: int = 10000,
    seed: int = 0,
    cap_bits: int = EXHAUSTIVE_CAP_BITS,
) -> Iterator[ArcSet]:
    """Dispatch to one of the three enumeration strategies by name."""
    if not model.torsion_ready:
        raise EvenLevelError("Ptolemy enumeration requires an odd level m")
    if strategy == "exhaustive":
        return enumerate_ptolemy_exhaustive(model, cap_bits)
    if strategy == "closure":
        return enumerate_ptolemy_closures(model, max_generators)
    if strategy == "random":
        return enumerate_ptolemy_random(model, count, seed)
    raise ValueError(f"unknown strategy {strategy!r}")
