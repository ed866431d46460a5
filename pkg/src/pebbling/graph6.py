"""Bit-exact graph6 codec for graphs with up to 62 vertices.

Format: one ASCII line. The first byte is 63+n. The upper triangle of the
adjacency matrix is read column by column (column j = 1..n-1, rows
i = 0..j-1), packed big-endian into 6-bit groups, zero-padded to a multiple
of six bits, and each group is stored as byte value+63.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, from_edge_list

MAX_N = 62
_HEADER_PREFIX = ">>graph6<<"


class Graph6Error(GraphError):
    """Raised for malformed graph6 input or unencodable graphs."""


def encode_graph6(g: Graph) -> str:
    """Encode a graph under its given vertex order (no relabeling)."""
    if g.n > MAX_N:
        raise Graph6Error(f"graph6 single-byte header supports n <= {MAX_N}, got {g.n}")
    bits: list[int] = []
    for j in range(1, g.n):
        row = g.neighbor_masks[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + g.n)]
    for pos in range(0, len(bits), 6):
        group = 0
        for b in bits[pos : pos + 6]:
            group = (group << 1) | b
        chars.append(chr(group + 63))
    return "".join(chars)


def decode_graph6(text: str) -> Graph:
    """Decode one graph6 line; inverse of :func:`encode_graph6`.

    An optional ``>>graph6<<`` prefix and surrounding whitespace are
    tolerated. Rejects bad lengths, out-of-range bytes, nonzero padding
    bits, and disconnected graphs.
    """
    s = text.strip()
    if s.startswith(_HEADER_PREFIX):
        s = s[len(_HEADER_PREFIX) :].strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    n = ord(s[0]) - 63
    if not 1 <= n <= MAX_N:
        raise Graph6Error(f"unsupported graph6 size header {s[0]!r} (n={n})")
    nbits = n * (n - 1) // 2
    expected_len = 1 + (nbits + 5) // 6
    if len(s) != expected_len:
        raise Graph6Error(
            f"graph6 string for n={n} must have {expected_len} bytes, got {len(s)}"
        )
    bits: list[int] = []
    for ch in s[1:]:
        group = ord(ch) - 63
        if not 0 <= group < 64:
            raise Graph6Error(f"byte {ch!r} outside graph6 range")
        bits.extend((group >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    try:
        return from_edge_list(n, edges)
    except GraphError as exc:
        raise Graph6Error(f"decoded graph rejected: {exc}") from exc
