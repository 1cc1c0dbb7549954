"""graph6 and edge-list serialization plus deterministic JSON rendering.

The graph6 codec is written out long-hand for orders up to 62 (one header
byte): the upper triangle is read column by column, packed six bits per
byte, each byte offset by 63.  Round trips are exercised heavily in the
tests, including against an independent decoder.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import MalformedGraph6, MalformedLine, TooLarge
from .graphs import Graph, from_edge_list

GRAPH6_CAP = 62


@dataclass(frozen=True)
class GraphDocument:
    """A parsed graph together with where it came from."""

    graph: Graph
    source_format: str
    label: str | None = None


def _triangle_slots(n: int) -> Iterator[tuple[int, int]]:
    # column-wise upper triangle: (0,1), (0,2), (1,2), (0,3), (1,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (order at most 62)."""
    s = line.strip()
    if not s:
        raise MalformedGraph6("empty line")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    vals = [ord(c) - 63 for c in s]
    if any(v < 0 or v > 63 for v in vals):
        raise MalformedGraph6(f"byte outside graph6 range in {line!r}")
    n = vals[0]
    if n == 63:
        raise MalformedGraph6("multi-byte order header (n > 62) not supported")
    if n < 1:
        raise MalformedGraph6("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    expect = 1 + (nbits + 5) // 6
    if len(vals) != expect:
        raise MalformedGraph6(
            f"expected {expect} bytes for order {n}, got {len(vals)}"
        )
    bits = []
    for v in vals[1:]:
        bits.extend((v >> k & 1) for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = [
        (i, j) for (i, j), b in zip(_triangle_slots(n), bits) if b
    ]
    return from_edge_list(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph of order at most 62 as one graph6 line (no newline)."""
    if g.n > GRAPH6_CAP:
        raise TooLarge(f"graph6 writer is capped at n <= {GRAPH6_CAP}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    nacc = 0
    for i, j in _triangle_slots(g.n):
        acc = acc << 1 | (g.adj[i] >> j & 1)
        nacc += 1
        if nacc == 6:
            out.append(chr(acc + 63))
            acc, nacc = 0, 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def parse_graph6_lines(text: str) -> Iterator[Graph]:
    """Decode every nonempty line of a graph6 stream."""
    for line in text.splitlines():
        if line.strip():
            yield parse_graph6(line)


def parse_edge_list(text: str) -> GraphDocument:
    """Parse the plain edge-list format.

    The first significant line is ``n <order>``; every following line is
    ``u v``.  Blank lines and lines starting with ``#`` are skipped.
    """
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise MalformedLine(
                    f"line {lineno}: expected header 'n <order>', got {raw!r}"
                )
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise MalformedLine(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(f"line {lineno}: non-integer vertex in {raw!r}")
        edges.append((u, v))
    if n is None:
        raise MalformedLine("missing 'n <order>' header line")
    return GraphDocument(from_edge_list(n, edges), "edgelist")


def to_json_line(obj) -> str:
    """Render a report deterministically: sorted keys, no whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def graphs_to_lines(graphs: Iterable[Graph]) -> str:
    return "\n".join(write_graph6(g) for g in graphs)
