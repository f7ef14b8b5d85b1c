"""graph6 / digraph6 encoders and decoders, and the JSON shape for mixed graphs.

graph6 stores the upper triangle of the adjacency matrix column by column
(``x(0,1) x(0,2) x(1,2) x(0,3) ...``); digraph6 is ``&`` followed by the full
matrix row by row.  Both pack bits six at a time into bytes offset by 63.
"""

from __future__ import annotations

import json

from .graphs import GraphError, MixedGraph, OrientedGraph, SimpleGraph

GRAPH6_HEADER = ">>graph6<<"
DIGRAPH6_HEADER = ">>digraph6<<"
_MAX_N = 68719476735


class FormatError(GraphError):
    """Raised on malformed graph6, digraph6 or JSON input."""


def _encode_n(n: int) -> str:
    if n < 0 or n > _MAX_N:
        raise FormatError(f"vertex count {n} cannot be encoded")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise FormatError("missing vertex count")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated 6-byte vertex count")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, data[8:]
    if len(data) < 4:
        raise FormatError("truncated 3-byte vertex count")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, data[4:]


def _pack(bits: list[int]) -> str:
    bits = bits + [0] * (-len(bits) % 6)
    out = []
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i : i + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def _unpack(data: bytes, nbits: int) -> list[int]:
    need = (nbits + 5) // 6
    if len(data) < need:
        raise FormatError(f"truncated bit stream: need {need} bytes, got {len(data)}")
    if len(data) > need:
        raise FormatError(f"{len(data) - need} trailing bytes after bit stream")
    bits = []
    for c in data:
        v = c - 63
        for s in range(5, -1, -1):
            bits.append((v >> s) & 1)
    return bits[:nbits]


def _validate(text: str) -> bytes:
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise FormatError("non-ASCII character in graph string") from exc
    for c in data:
        if not 63 <= c <= 126:
            raise FormatError(f"invalid byte {c!r} in graph string")
    return data


def parse_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if s.startswith("&") or s.startswith(":"):
        raise FormatError(f"{s[:1]!r} prefix is not graph6")
    n, rest = _decode_n(_validate(s))
    if n > 64:
        raise FormatError(f"vertex count {n} exceeds the supported maximum of 64")
    bits = _unpack(rest, n * (n - 1) // 2)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return SimpleGraph(n, edges)


def emit_graph6(g: SimpleGraph, header: bool = False) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    body = _encode_n(g.n) + _pack(bits)
    return GRAPH6_HEADER + body if header else body


def parse_digraph6(text: str) -> OrientedGraph:
    s = text.strip()
    if s.startswith(DIGRAPH6_HEADER):
        s = s[len(DIGRAPH6_HEADER) :]
    if not s.startswith("&"):
        raise FormatError("digraph6 strings start with '&'")
    n, rest = _decode_n(_validate(s[1:]))
    if n > 64:
        raise FormatError(f"vertex count {n} exceeds the supported maximum of 64")
    bits = _unpack(rest, n * n)
    arcs = []
    for i in range(n):
        for j in range(n):
            if bits[i * n + j]:
                if i == j:
                    raise FormatError(f"loop at vertex {i} is not allowed")
                arcs.append((i, j))
    return OrientedGraph(n, arcs)


def emit_digraph6(g: OrientedGraph, header: bool = False) -> str:
    bits = [1 if (i, j) in g.arcs else 0 for i in range(g.n) for j in range(g.n)]
    body = "&" + _encode_n(g.n) + _pack(bits)
    return DIGRAPH6_HEADER + body if header else body


def parse_any(text: str) -> SimpleGraph | OrientedGraph:
    """graph6 or digraph6, chosen by the ``&`` prefix."""
    s = text.strip()
    if s.startswith("&") or s.startswith(DIGRAPH6_HEADER):
        return parse_digraph6(s)
    return parse_graph6(s)


def emit_any(g) -> str:
    if isinstance(g, SimpleGraph):
        return emit_graph6(g)
    if isinstance(g, OrientedGraph):
        return emit_digraph6(g)
    return mixed_to_json(g)


def mixed_to_json(h: MixedGraph) -> str:
    return json.dumps(
        {"n": h.n, "edges": [list(e) for e in sorted(h.edges)], "arcs": [list(a) for a in sorted(h.arcs)]},
        separators=(",", ":"),
    )


def mixed_from_json(text: str) -> MixedGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj:
        raise FormatError("mixed graph JSON needs an object with field 'n'")
    try:
        return MixedGraph(
            int(obj["n"]),
            [tuple(e) for e in obj.get("edges", [])],
            [tuple(a) for a in obj.get("arcs", [])],
        )
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad mixed graph: {exc}") from exc
