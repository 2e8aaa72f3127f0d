"""Rigid arc sets and (m+2)-angulations.

A set of m-arcs is *rigid* when no two of its members cross, i.e. no
member carries an extension against another in any degree 1..m; rigid
sets are exactly the partial (m+2)-angulations of the polygon.  Maximal
rigid sets are the (m+2)-angulations; each one has exactly n orbits and
they are enumerated here as the maximal independent sets of the crossing
graph, by pivoted backtracking over bitmasks.

:func:`fuss_catalan_type_d` evaluates the type-D Fuss-Catalan product
formula, an arithmetic cross-check for the enumerator counts that shares
no code with it.
"""

from __future__ import annotations

import math
from typing import Iterator

from .hom import ArcSet, _iter_bits, tables
from .polygon import Model, m_arcs

ANGULATION_CAP_BITS = 128


def is_rigid(s: ArcSet) -> bool:
    """Whether no two members of s cross."""
    t = tables(s.model)
    bits = s.bits
    for i in _iter_bits(bits):
        if t.cross[i] & bits:
            return False
    return True


def is_angulation(s: ArcSet) -> bool:
    """Whether s is rigid and no further m-arc can be added rigidly."""
    t = tables(s.model)
    bits = s.bits
    if not is_rigid(s):
        return False
    k = len(t.cross)
    for j in range(k):
        if bits >> j & 1 == 0 and t.cross[j] & bits == 0:
            return False
    return True


def enumerate_angulations(
    model: Model, cap_bits: int = ANGULATION_CAP_BITS
) -> Iterator[ArcSet]:
    """All (m+2)-angulations, via pivoted backtracking.

    Branches are explored in arc-index order with a deterministic pivot
    choice, so the stream order is reproducible; every emission is a
    distinct maximal non-crossing set.
    """
    t = tables(model)
    k = len(m_arcs(model))
    if k > cap_bits:
        raise ValueError(
            f"arc universe has {k} bits, above the angulation cap {cap_bits}"
        )
    full = (1 << k) - 1
    compat = tuple(full & ~t.cross[i] & ~(1 << i) for i in range(k))

    def extend(chosen: int, candidates: int, excluded: int) -> Iterator[int]:
        if candidates == 0 and excluded == 0:
            yield chosen
            return
        pivot, best = -1, -1
        pool = candidates | excluded
        while pool:
            low = pool & -pool
            v = low.bit_length() - 1
            pool ^= low
            score = (candidates & compat[v]).bit_count()
            if score > best:
                pivot, best = v, score
        branch = candidates & ~compat[pivot]
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            branch ^= low
            yield from extend(
                chosen | low, candidates & compat[v], excluded & compat[v]
            )
            candidates &= ~low
            excluded |= low

    for bits in extend(0, full, 0):
        yield ArcSet(model, bits)


def fuss_catalan_type_d(n: int, m: int) -> int:
    """The type-D Fuss-Catalan number for rank n and level m.

    Product over the degrees d_i of the rank-n type-D reflection group
    (2, 4, ..., 2n-2 and n) of (m*h + d_i) / d_i, with Coxeter number
    h = 2n - 2.  Counts the (m+2)-angulations.
    """
    if n < 3 or m < 1:
        raise ValueError("rank must be >= 3 and level >= 1")
    degrees = [2 * i for i in range(1, n)] + [n]
    h = 2 * n - 2
    num = math.prod(m * h + d for d in degrees)
    den = math.prod(degrees)
    assert num % den == 0
    return num // den
