"""Classical invariants of connected graphs used by the bound checks.

Girth uses infinity as its acyclic value so comparisons like ``girth > 5``
select trees without a sentinel integer; the JSON layer turns it into
null.  The clique number comes from a pivoting branch-and-bound over
candidate bit masks, cross-checked against subset brute force in the
tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import EmptySet, IndexOutOfRange
from .graphs import DistanceMatrix, Graph, _bits

INFINITE_GIRTH = math.inf


@dataclass(frozen=True)
class InvariantSummary:
    diameter: int
    girth: int | float
    omega: int
    max_degree: int
    is_tree: bool
    is_path: bool
    is_cycle: bool
    is_star: bool
    spider: tuple[int, int, int] | None


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or infinity for a forest.

    Every shortest cycle crosses each of its edges, so dropping an edge
    and measuring the detour between its ends finds it.
    """
    best = INFINITE_GIRTH
    for u, v in g.edges():
        # BFS from u to v in g minus the edge uv
        dist = [-1] * g.n
        dist[u] = 0
        frontier = [u]
        d = 0
        while frontier and dist[v] < 0:
            d += 1
            nxt = []
            for w in frontier:
                row = g.adj[w]
                if w == u:
                    row &= ~(1 << v)
                for z in _bits(row):
                    if dist[z] < 0:
                        dist[z] = d
                        nxt.append(z)
            frontier = nxt
        if dist[v] >= 0 and dist[v] + 1 < best:
            best = dist[v] + 1
            if best == 3:
                break
    return best


def clique_number(g: Graph) -> int:
    """Exact maximum clique size by branch and bound with pivoting."""
    best = 0
    adj = g.adj

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if cand == 0 and excl == 0:
            if size > best:
                best = size
            return
        if size + cand.bit_count() <= best:
            return
        pivot = max(_bits(cand | excl), key=lambda u: (cand & adj[u]).bit_count())
        branch = cand & ~adj[pivot]
        for v in _bits(branch):
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, (1 << g.n) - 1, 0)
    return best


def clique_number_oracle(g: Graph) -> int:
    """Subset brute force, for cross-checking at small orders."""
    for k in range(g.n, 1, -1):
        for s in combinations(range(g.n), k):
            if all(g.has_edge(u, v) for u, v in combinations(s, 2)):
                return k
    return 1


def spider_signature(g: Graph) -> tuple[int, int, int] | None:
    """Sorted leg lengths when g is a tree of three paths glued at one vertex."""
    degs = g.degrees()
    if g.m != g.n - 1:
        return None
    if max(degs, default=0) != 3 or degs.count(3) != 1:
        return None
    center = degs.index(3)
    legs = []
    for first in g.neighbors(center):
        length = 1
        prev, cur = center, first
        while g.degree(cur) == 2:
            nxt = next(w for w in g.neighbors(cur) if w != prev)
            prev, cur = cur, nxt
            length += 1
        legs.append(length)
    return tuple(sorted(legs))  # type: ignore[return-value]


def distance_window(
    g: Graph, dm: DistanceMatrix, u: int, a: frozenset[int] | set[int]
) -> tuple[int, bool]:
    """Distance from u to the set a, and whether every member sits within
    that distance plus the diameter of a."""
    if not a:
        raise EmptySet("distance to an empty vertex set is undefined")
    members = sorted(a)
    for v in members + [u]:
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"vertex {v} outside range 0..{g.n - 1}")
    rows = dm.rows
    d = min(rows[u][v] for v in members)
    diam_a = max(
        (rows[x][y] for x, y in combinations(members, 2)), default=0
    )
    ok = all(d <= rows[u][v] <= d + diam_a for v in members)
    return d, ok


def invariant_summary(g: Graph, dm: DistanceMatrix) -> InvariantSummary:
    """All invariants the bound suite consumes, in one pass."""
    degs = g.degrees()
    n, m = g.n, g.m
    is_tree = m == n - 1
    sorted_degs = sorted(degs)
    is_path = n == 1 or (is_tree and sorted_degs[0] == 1 and sorted_degs[-1] <= 2)
    is_cycle = n >= 3 and all(d == 2 for d in degs)
    is_star = n >= 2 and is_tree and max(degs) == n - 1
    return InvariantSummary(
        diameter=max(max(row) for row in dm.rows),
        girth=girth(g),
        omega=clique_number(g),
        max_degree=max(degs, default=0),
        is_tree=is_tree,
        is_path=is_path,
        is_cycle=is_cycle,
        is_star=is_star,
        spider=spider_signature(g),
    )
