"""Bit-exact graph6 encoding and decoding for graphs with n <= 64.

Format: N(n) followed by the upper triangle of the adjacency matrix in
column-major order, packed into 6-bit groups offset by 63.  N(n) is a single
byte n+63 for n <= 62, else 126 followed by three bytes holding n in 18 bits.
"""

from __future__ import annotations

from .errors import MalformedGraph6
from .graphs import ChemicalGraph, build_graph

_HEADER = ">>graph6<<"


def encode(g: ChemicalGraph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    bits = 0
    nbits = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            bits = (bits << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out)


def decode(text: str) -> ChemicalGraph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):].strip()
    if not s:
        raise MalformedGraph6("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not (0 <= v <= 63):
            raise MalformedGraph6(f"byte {ch!r} outside graph6 range")
        vals.append(v)
    if vals[0] == 63:  # '~' long form
        if len(vals) < 4:
            raise MalformedGraph6("truncated long-form order")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n < 1 or n > 64:
        raise MalformedGraph6(f"order {n} outside supported range [1, 64]")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"body length {len(body)} wrong for order {n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    # trailing padding must be zero
    while k < 6 * len(body):
        if body[k // 6] >> (5 - k % 6) & 1:
            raise MalformedGraph6("nonzero padding bits")
        k += 1
    return build_graph(n, edges)
