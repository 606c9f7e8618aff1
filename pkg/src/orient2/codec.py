"""graph6 / digraph6 text codecs (single-byte size, n <= 62) and an edge-list reader.

graph6 packs the upper triangle of the adjacency matrix in column order
(0,1), (0,2), (1,2), (0,3), ... into big-endian 6-bit groups offset by 63.
digraph6 is '&' plus the full n*n matrix in row-major order.
"""

from __future__ import annotations

from .graphs import Digraph, Graph, Orientation

GRAPH6_HEADER = ">>graph6<<"
DIGRAPH6_HEADER = ">>digraph6<<"

MAX_VERTICES = 62


class GraphFormatError(ValueError):
    """Raised for malformed graph6/digraph6/edge-list input."""


def _pack_bits(bitlist: list[int]) -> str:
    chars = []
    for start in range(0, len(bitlist), 6):
        group = bitlist[start : start + 6]
        group += [0] * (6 - len(group))
        value = 0
        for b in group:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return "".join(chars)


def _unpack_bits(payload: str, nbits: int) -> list[int]:
    expected_chars = (nbits + 5) // 6
    if len(payload) != expected_chars:
        raise GraphFormatError(
            f"payload holds {len(payload)} bytes, expected {expected_chars} for {nbits} bits"
        )
    out: list[int] = []
    for ch in payload:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise GraphFormatError(f"byte {code!r} outside printable graph6 range 63..126")
        value = code - 63
        out.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    tail = out[nbits:]
    if any(tail):
        raise GraphFormatError("nonzero padding bits")
    return out[:nbits]


def _encode_order(n: int) -> str:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"only graphs with at most {MAX_VERTICES} vertices are supported")
    return chr(n + 63)


def _decode_order(text: str) -> tuple[int, str]:
    if not text:
        raise GraphFormatError("empty input")
    code = ord(text[0])
    if not 63 <= code <= 126:
        raise GraphFormatError(f"bad length byte {code!r}")
    n = code - 63
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graphs with more than {MAX_VERTICES} vertices are not supported")
    return n, text[1:]


def emit_graph6(g: Graph) -> str:
    head = _encode_order(g.n)
    bitlist = [1 if g.has_edge(u, v) else 0 for v in range(1, g.n) for u in range(v)]
    return head + _pack_bits(bitlist)


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    n, payload = _decode_order(data)
    bitlist = _unpack_bits(payload, n * (n - 1) // 2)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bitlist[i]:
                edges.append((u, v))
            i += 1
    return Graph.from_edges(n, edges)


def emit_digraph6(d: Digraph) -> str:
    head = _encode_order(d.n)
    bitlist = [1 if d.has_arc(u, v) else 0 for u in range(d.n) for v in range(d.n)]
    return "&" + head + _pack_bits(bitlist)


def parse_digraph6(text: str) -> Digraph:
    data = text.strip()
    if data.startswith(DIGRAPH6_HEADER):
        data = data[len(DIGRAPH6_HEADER) :]
    if not data.startswith("&"):
        raise GraphFormatError("digraph6 input must start with '&'")
    n, payload = _decode_order(data[1:])
    bitlist = _unpack_bits(payload, n * n)
    arcs = []
    i = 0
    for u in range(n):
        for v in range(n):
            if bitlist[i]:
                if u == v:
                    raise GraphFormatError(f"self-arc at vertex {u}")
                arcs.append((u, v))
            i += 1
    return Digraph.from_arcs(n, arcs)


def emit_orientation(o: Orientation) -> str:
    return emit_digraph6(o.dir)


def parse_edgelist(text: str) -> Graph:
    """Read the plain format ``n m`` on the first line then one ``u v`` per edge line."""
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphFormatError("edge list needs at least 'n m' header values")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token in edge list: {exc}") from exc
    n, m = values[0], values[1]
    if n < 0 or m < 0:
        raise GraphFormatError("negative vertex or edge count")
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graphs with more than {MAX_VERTICES} vertices are not supported")
    if len(values) != 2 + 2 * m:
        raise GraphFormatError(f"expected {2 * m} endpoint values, found {len(values) - 2}")
    pairs = list(zip(values[2::2], values[3::2]))
    try:
        return Graph.from_edges(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def parse_graph(text: str) -> Graph:
    """Accept graph6 (with optional header) or the plain edge-list format."""
    stripped = text.strip()
    if not stripped:
        raise GraphFormatError("empty input")
    first_line = stripped.splitlines()[0].split()
    if len(first_line) >= 2 and all(tok.lstrip("-").isdigit() for tok in first_line):
        return parse_edgelist(stripped)
    return parse_graph6(stripped)
