"""graph6 encoding and DOT export.

graph6 packs the upper triangle of the adjacency matrix column by column
(bit x_{i,j} for j = 1..n-1, i = 0..j-1), zero-pads the bit string to a
multiple of six, and maps each 6-bit group to the ASCII character
``value + 63``.  The leading character is ``n + 63``.  Only the short
form is needed here since n never exceeds 16.
"""

from __future__ import annotations

from .graphs import Graph, MAX_VERTICES, SizeLimitError, graph_from_edges

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def emit_graph6(g: Graph) -> str:
    bits: list[int] = []
    edge_set = set(g.edges)
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in edge_set else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER) :]
    if not data:
        raise Graph6Error("empty graph6 string")
    if any(not (63 <= ord(c) <= 126) for c in data):
        raise Graph6Error("graph6 characters must be in the range chr(63)..chr(126)")
    n = ord(data[0]) - 63
    if n == 63:
        # Long-form size prefix; never produced for graphs this small.
        raise SizeLimitError("long-form graph6 sizes are not supported")
    if n > MAX_VERTICES:
        raise SizeLimitError(f"graph6 input has {n} vertices; at most {MAX_VERTICES} supported")
    if n < 1:
        raise Graph6Error("graph6 vertex count must be at least 1")
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[1:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data characters for n={n}, got {len(body)}")
    bits: list[int] = []
    for c in body:
        value = ord(c) - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    count = n * (n - 1) // 2
    if any(bits[count:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return graph_from_edges(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
