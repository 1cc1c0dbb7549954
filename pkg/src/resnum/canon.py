"""Exact canonical labeling for graphs of order at most 16.

The search places vertices one position at a time, keeping the
lexicographically least upper-triangle adjacency bit string over every
labeling it explores.  Iterated neighborhood refinement (re-run after each
placement) confines candidates to one invariant cell, interchangeable
twins collapse to a single branch, and prefixes worse than the best string
found so far are cut.  Two graphs receive equal forms iff they are
isomorphic; the permutation oracle in the tests pins that down at small
orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLarge
from .graphs import Graph, _bits

CANONICAL_CAP = 16


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Upper-triangle adjacency bits of the canonical labeling.

    `bits` is column-wise: positions (0,1), (0,2), (1,2), (0,3), (1,3),
    (2,3), ... which is also the bit order of the graph6 format.
    """

    n: int
    bits: str

    def to_graph(self) -> Graph:
        """Rebuild the canonically labeled graph."""
        rows = [0] * self.n
        idx = 0
        for j in range(1, self.n):
            for i in range(j):
                if self.bits[idx] == "1":
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                idx += 1
        return Graph(self.n, tuple(rows))


def _refine(n: int, adj: tuple[int, ...], colors: list[int]) -> list[int]:
    """Iterate (color, sorted neighbor colors) until the partition is stable."""
    ncells = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(colors[w] for w in _bits(adj[v]))
            sigs.append((colors[v], tuple(nbr)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncells:
            return colors
        ncells = len(rank)


def _twins(adj: tuple[int, ...], u: int, v: int) -> bool:
    # swapping u and v is an automorphism iff they agree off each other
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form of g; exact for n <= 16, TooLarge above."""
    n = g.n
    if n > CANONICAL_CAP:
        raise TooLarge(f"canonical form is capped at n <= {CANONICAL_CAP}, got {n}")
    if n == 1:
        return CanonicalForm(1, "")
    adj = g.adj
    full = (1 << n) - 1
    # best[i] holds the i+1 adjacency bits of placement position i+1,
    # most significant bit toward position 0; list order is string order.
    best: list[int] | None = None

    def search(placed: list[int], placed_mask: int, rows: list[int]) -> None:
        nonlocal best
        while True:
            if placed_mask == full:
                if best is None or rows < best:
                    best = rows.copy()
                return
            colors = [0] * n
            p = len(placed)
            for i, v in enumerate(placed):
                colors[v] = i
            for v in _bits(full & ~placed_mask):
                colors[v] = p
            colors = _refine(n, adj, colors)
            cells: dict[int, list[int]] = {}
            for v in _bits(full & ~placed_mask):
                cells.setdefault(colors[v], []).append(v)
            cell = cells[min(cells)]
            if len(cell) > 1:
                break
            # forced placement, no branching
            v = cell[0]
            if p:
                r = 0
                for u in placed:
                    r = r << 1 | (adj[v] >> u & 1)
                rows.append(r)
                if best is not None and rows > best[: len(rows)]:
                    return
            placed.append(v)
            placed_mask |= 1 << v

        p = len(placed)
        cands = []
        for v in cell:
            r = 0
            for u in placed:
                r = r << 1 | (adj[v] >> u & 1)
            cands.append((r, v))
        cands.sort()
        reps: list[tuple[int, int]] = []
        for r, v in cands:
            if any(r == r2 and _twins(adj, v, v2) for r2, v2 in reps):
                continue
            reps.append((r, v))
        for r, v in reps:
            new_rows = rows + [r] if p else rows.copy()
            if p and best is not None and new_rows > best[: len(new_rows)]:
                continue
            search(placed + [v], placed_mask | 1 << v, new_rows)

    search([], 0, [])
    assert best is not None
    bits = "".join(format(best[i], f"0{i + 1}b") for i in range(n - 1))
    return CanonicalForm(n, bits)
