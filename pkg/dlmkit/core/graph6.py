"""
graph6 lines to and from the bitset ``Graph`` (no sparse6/digraph6), coded by networkx.

Headers are checked here before decoding: one byte ``63+n`` for ``n <= 62``, or ``126``
followed by three 6-bit bytes for ``63 <= n <= 64``. Padding bits must be zero.
"""

import logging
from typing import Iterable, Iterator, Optional

import networkx as nx

from dlmkit.core.graph import MAX_VERTICES, Graph, is_connected
from dlmkit.errors import Graph6Error

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"


def as_networkx(g: Graph) -> nx.Graph:
    """``g`` as a networkx graph on nodes ``0..n-1``, inserted in order."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Bitset graph from a networkx graph whose nodes are ``0..n-1``."""
    rows = [0] * h.number_of_nodes()
    for u, v in h.edges():
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(len(rows), tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as one graph6 line without the trailing newline."""
    return nx.to_graph6_bytes(as_networkx(g), header=False).decode("ascii").rstrip("\n")


def _decode_n(data: list[int], line_number: Optional[int]) -> tuple[int, list[int]]:
    if data[0] != 63:
        return data[0], data[1:]
    if len(data) < 4:
        raise Graph6Error("truncated extended size header", line_number)
    if data[1] == 63:
        raise Graph6Error("8-byte size header is not supported", line_number)
    n = data[1] << 12 | data[2] << 6 | data[3]
    if n < 63:
        raise Graph6Error(f"extended header used for n={n} < 63", line_number)
    return n, data[4:]


def parse_graph6(text: str, line_number: Optional[int] = None) -> Graph:
    """
    Decode one graph6 line; an optional ``>>graph6<<`` prefix and trailing newline are accepted.

    Raises:
        Graph6Error: on a malformed header byte, a truncated or overlong body, or n above the cap
    """
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line", line_number)
    data = [ord(ch) - 63 for ch in line]
    for position, value in enumerate(data):
        if not 0 <= value <= 63:
            raise Graph6Error(f"byte {line[position]!r} at offset {position} is outside the graph6 range", line_number)

    n, body = _decode_n(data, line_number)
    if n > MAX_VERTICES:
        raise Graph6Error(f"n={n} exceeds the cap of {MAX_VERTICES}", line_number)
    try:
        h = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError) as e:
        raise Graph6Error(f"bad graph6 body for n={n}: {str(e)}", line_number) from e

    pad = len(body) * 6 - n * (n - 1) // 2
    if body and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", line_number)
    return from_networkx(h)


def ingest_graph6_stream(
    lines: Iterable[str],
    connected_only: bool = False,
    abort_on_error: bool = True,
    errors: Optional[list[Graph6Error]] = None,
) -> Iterator[Graph]:
    """
    Parse graph6 lines in order; blank lines are skipped and no dedup is attempted.

    Args:
        lines: Text lines, newline-terminated or not
        connected_only: Drop disconnected graphs
        abort_on_error: Raise on the first bad line; otherwise log it and continue
        errors: Optional list that collects the per-line errors when not aborting

    Raises:
        Graph6Error: naming the 1-based line number, when ``abort_on_error`` is set
    """
    for line_number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            g = parse_graph6(line, line_number)
        except Graph6Error as e:
            if abort_on_error:
                raise
            logger.warning(f"Skipping bad graph6 input: {e}")
            if errors is not None:
                errors.append(e)
            continue
        if connected_only and not is_connected(g):
            continue
        yield g
