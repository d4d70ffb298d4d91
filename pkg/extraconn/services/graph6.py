"""
graph6 and edge-list interchange.

graph6 packing goes through networkx (``to_graph6_bytes`` /
``from_graph6_bytes``).  Before a line reaches networkx it is checked here
so that malformed input is reported with a byte position: printable range,
order field, body length and zero padding of the last byte.

The edge-list format is a ``n m`` header followed by ``m`` lines ``u v``
with 0-based ids; blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import io
import logging
from typing import IO, Iterable, Iterator

import networkx as nx

from ..errors import EdgeListError, Graph6Error
from ..models import Graph, build_graph

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
_MIN_BYTE = 63
_MAX_BYTE = 126


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise Graph6Error("empty input", 0)
    if data[0] != ord("~"):
        return data[0] - _MIN_BYTE, 1
    if len(data) >= 2 and data[1] == ord("~"):
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise Graph6Error("truncated order field", len(data))
    n = 0
    for b in data[start : start + width]:
        n = n << 6 | (b - _MIN_BYTE)
    return n, start + width


# =============================================================================
# graph6
# =============================================================================


def encode_graph6(G: Graph) -> str:
    """Encode *G* as a graph6 string (no header, no newline)."""
    return nx.to_graph6_bytes(G.to_networkx(), header=False).decode("ascii").rstrip("\n")


def decode_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line.

    A leading ``>>graph6<<`` header and surrounding whitespace are ignored.
    Out-of-range bytes, wrong lengths and non-zero padding raise
    :class:`Graph6Error` with the byte position (relative to the graph6
    body, after the header).
    """
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER) :]
    for pos, b in enumerate(data):
        if not _MIN_BYTE <= b <= _MAX_BYTE:
            raise Graph6Error(f"byte {b!r} outside the printable range 63..126", pos)
    n, start = _decode_order(data)
    nbits = n * (n - 1) // 2
    expected = start + (nbits + 5) // 6
    if len(data) < expected:
        raise Graph6Error(
            f"truncated: order {n} needs {expected} bytes, got {len(data)}", len(data)
        )
    if len(data) > expected:
        raise Graph6Error(f"trailing data after {expected} bytes", expected)
    if nbits % 6 and (data[-1] - _MIN_BYTE) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("non-zero padding bits", expected - 1)
    return Graph.from_networkx(nx.from_graph6_bytes(data))


def read_graph6_records(
    source: IO | Iterable[str | bytes] | str | bytes,
) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for every graph6 line of *source*.

    *source* may be a text or binary stream, an iterable of lines, or the
    whole content as one string.  Blank lines are skipped and a
    ``>>graph6<<`` header (alone or prefixing the first graph) is accepted.
    The first malformed line raises :class:`Graph6Error` carrying its
    1-based line number.
    """
    if isinstance(source, bytes):
        source = io.BytesIO(source)
    elif isinstance(source, str):
        source = io.StringIO(source)
    seen_content = False
    count = 0
    for line_no, raw in enumerate(source, start=1):
        line = raw.decode("utf-8", errors="replace") if isinstance(raw, bytes) else raw
        line = line.strip()
        if not line:
            continue
        if not seen_content and line.startswith(HEADER):
            line = line[len(HEADER) :].strip()
            seen_content = True
            if not line:
                continue
        seen_content = True
        try:
            graph = decode_graph6(line)
        except Graph6Error as exc:
            raise exc.at_line(line_no) from None
        count += 1
        yield line_no, graph
    logger.debug("Read %d graph6 line(s)", count)


def read_graph6_stream(source) -> Iterator[Graph]:
    """Graphs of a graph6 stream in file order."""
    for _, graph in read_graph6_records(source):
        yield graph


# =============================================================================
# Edge list
# =============================================================================


def read_edge_list(text: str | IO) -> Graph:
    """Parse the ``n m`` + ``u v`` edge-list format."""
    lines = text.splitlines() if isinstance(text, str) else (line for line in text)
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    header_line = 0
    for line_no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListError(f"expected two integers, got {line!r}", line_no)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(f"expected two integers, got {line!r}", line_no) from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError(f"negative header values {a} {b}", line_no)
            header, header_line = (a, b), line_no
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeListError(f"edge ({a}, {b}) has an id out of range 0..{n - 1}", line_no)
        if a == b:
            raise EdgeListError(f"self-loop at vertex {a}", line_no)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise EdgeListError(f"duplicate edge ({a}, {b})", line_no)
        seen.add(key)
        edges.append((a, b))
    if header is None:
        raise EdgeListError("missing 'n m' header", 1)
    n, m = header
    if len(edges) != m:
        raise EdgeListError(f"header declares {m} edges, found {len(edges)}", header_line)
    return build_graph(n, edges)


def write_edge_list(G: Graph) -> str:
    """Render *G* in the edge-list format (edges in lexicographic order)."""
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"
