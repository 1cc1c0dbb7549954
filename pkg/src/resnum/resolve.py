"""Resolving sets and the three dimension-style parameters built on them.

A vertex u resolves a pair {x, y} when d(u, x) != d(u, y).  The resolving
number of a connected graph is the least k such that *every* k-subset of
vertices resolves every pair.  It equals one plus the largest number of
vertices that fail to resolve some single pair, which turns the
exponential definition into one distance-matrix scan; the subset-scan
oracle is kept alongside so the shortcut never has to be trusted blindly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import DegeneratePair, IndexOutOfRange, TheoremViolation, TooLarge
from .graphs import DistanceMatrix, Graph, distance_matrix

ORACLE_CAP = 12
DIM_CAP = 16
UPDIM_CAP = 12


@dataclass(frozen=True)
class ResolvingReport:
    """Resolving number plus the pair and vertex set witnessing it.

    The witness set is the set of vertices equidistant from both ends of
    the witness pair, so it never resolves that pair and its size is one
    less than the resolving number.  For the one-vertex graph there is no
    pair; the witness fields degenerate to None and the empty set.
    """

    res: int
    witness_pair: tuple[int, int] | None
    witness_nonresolving_set: frozenset[int]


@dataclass(frozen=True)
class DimensionReport:
    """Metric dimension and/or upper dimension with witness sets."""

    dim: int | None = None
    updim: int | None = None
    witness_min_set: tuple[int, ...] | None = None
    witness_max_minimal_set: tuple[int, ...] | None = None


def _check_pair(n: int, pair: tuple[int, int]) -> tuple[int, int]:
    x, y = pair
    for w in (x, y):
        if not 0 <= w < n:
            raise IndexOutOfRange(f"vertex {w} outside range 0..{n - 1}")
    if x == y:
        raise DegeneratePair(f"pair must be two distinct vertices, got {pair}")
    return (x, y) if x < y else (y, x)


def non_resolvers(g: Graph, dm: DistanceMatrix, pair: tuple[int, int]) -> frozenset[int]:
    """Vertices equidistant from both members of pair (never x or y themselves)."""
    x, y = _check_pair(g.n, pair)
    return frozenset(u for u in range(g.n) if dm.rows[u][x] == dm.rows[u][y])


def is_resolving_set(
    g: Graph, dm: DistanceMatrix, s: Iterable[int]
) -> tuple[bool, tuple[int, int] | None]:
    """Definitional check; on failure also return the first unresolved pair."""
    members = sorted(set(s))
    for v in members:
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"vertex {v} outside range 0..{g.n - 1}")
    rows = dm.rows
    for x in range(g.n - 1):
        for y in range(x + 1, g.n):
            if all(rows[u][x] == rows[u][y] for u in members):
                return False, (x, y)
    return True, None


def resolving_number(g: Graph, dm: DistanceMatrix | None = None) -> ResolvingReport:
    """Exact resolving number from one scan over all vertex pairs.

    Among pairs maximizing the count of equidistant vertices the
    lexicographically smallest is reported.
    """
    if g.n == 1:
        return ResolvingReport(1, None, frozenset())
    if dm is None:
        dm = distance_matrix(g)
    a = np.asarray(dm.rows, dtype=np.int32)
    best = -1
    best_pair = (0, 1)
    for x in range(g.n - 1):
        eq = np.count_nonzero(a[x + 1 :] == a[x], axis=1)
        y_rel = int(np.argmax(eq))
        if int(eq[y_rel]) > best:
            best = int(eq[y_rel])
            best_pair = (x, x + 1 + y_rel)
    x, y = best_pair
    witness = frozenset(np.flatnonzero(a[x] == a[y]).tolist())
    return ResolvingReport(best + 1, best_pair, witness)


def resolving_number_oracle(g: Graph) -> int:
    """Scan subsets by increasing cardinality straight off the definition."""
    if g.n > ORACLE_CAP:
        raise TooLarge(f"subset-scan oracle is capped at n <= {ORACLE_CAP}, got {g.n}")
    if g.n == 1:
        return 1
    dm = distance_matrix(g)
    for k in range(1, g.n):
        if all(
            is_resolving_set(g, dm, s)[0] for s in combinations(range(g.n), k)
        ):
            return k
    return g.n - 1


def _pair_nonresolver_masks(g: Graph, dm: DistanceMatrix) -> list[int]:
    """For every vertex pair, the bit mask of vertices failing to resolve it."""
    masks = []
    rows = dm.rows
    for x in range(g.n - 1):
        for y in range(x + 1, g.n):
            m = 0
            for u in range(g.n):
                if rows[u][x] == rows[u][y]:
                    m |= 1 << u
            masks.append(m)
    return masks


def _resolving_table(g: Graph, dm: DistanceMatrix) -> bytearray:
    """table[mask] == 1 iff the subset encoded by mask is a resolving set.

    A subset fails exactly when it sits inside the non-resolver set of
    some pair, so marking every submask of those sets covers all failures.
    """
    size = 1 << g.n
    table = bytearray([1]) * size
    for m in set(_pair_nonresolver_masks(g, dm)):
        sub = m
        while True:
            table[sub] = 0
            if sub == 0:
                break
            sub = (sub - 1) & m
    return table


def metric_dimension(g: Graph) -> DimensionReport:
    """Minimum size of a resolving set, with one witness of that size."""
    if g.n > DIM_CAP:
        raise TooLarge(f"metric dimension is capped at n <= {DIM_CAP}, got {g.n}")
    if g.n == 1:
        return DimensionReport(dim=1, witness_min_set=(0,))
    dm = distance_matrix(g)
    table = _resolving_table(g, dm)
    best_mask = None
    best_count = g.n + 1
    for mask in range(1, 1 << g.n):
        if table[mask] and mask.bit_count() < best_count:
            best_count = mask.bit_count()
            best_mask = mask
    assert best_mask is not None  # the full vertex set always resolves
    return DimensionReport(
        dim=best_count,
        witness_min_set=tuple(v for v in range(g.n) if best_mask >> v & 1),
    )


def upper_dimension(g: Graph) -> DimensionReport:
    """Maximum size of a minimal resolving set, plus dim for the chain check.

    Minimality only needs single-vertex deletions: supersets of resolving
    sets resolve, so a proper resolving subset implies a resolving subset
    one element smaller.
    """
    if g.n > UPDIM_CAP:
        raise TooLarge(f"upper dimension is capped at n <= {UPDIM_CAP}, got {g.n}")
    if g.n == 1:
        return DimensionReport(
            dim=1, updim=1, witness_min_set=(0,), witness_max_minimal_set=(0,)
        )
    dm = distance_matrix(g)
    table = _resolving_table(g, dm)
    best_min = None
    best_min_count = g.n + 1
    best_max = None
    best_max_count = 0
    for mask in range(1, 1 << g.n):
        if not table[mask]:
            continue
        k = mask.bit_count()
        if k < best_min_count:
            best_min_count = k
            best_min = mask
        if k > best_max_count:
            rest = mask
            minimal = True
            while rest:
                low = rest & -rest
                if table[mask ^ low]:
                    minimal = False
                    break
                rest ^= low
            if minimal:
                best_max_count = k
                best_max = mask
    assert best_min is not None and best_max is not None
    res = resolving_number(g, dm).res
    if not best_min_count <= best_max_count <= res:
        raise TheoremViolation(
            f"dimension chain broken: dim={best_min_count} "
            f"updim={best_max_count} res={res}"
        )
    return DimensionReport(
        dim=best_min_count,
        updim=best_max_count,
        witness_min_set=tuple(v for v in range(g.n) if best_min >> v & 1),
        witness_max_minimal_set=tuple(v for v in range(g.n) if best_max >> v & 1),
    )
