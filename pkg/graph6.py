"""
graph6 codec.

Bytes are printable (value + 63). The header gives n; the body packs the upper
triangle column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...) big-endian,
six bits per byte, zero padded.
"""

from graph_core import Graph, CapacityError
from config import MAX_VERTICES

HEADER = '>>graph6<<'


class Graph6ParseError(ValueError):
    def __init__(self, message, offset, line=None):
        self.offset = offset
        self.line = line
        where = f"line {line}, byte {offset}" if line is not None else f"byte {offset}"
        super().__init__(f"{message} ({where})")


def _encode_n(n):
    if n <= 62:
        return chr(n + 63)
    return '~' + ''.join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def graph6_encode(g):
    out = [_encode_n(g.n)]
    value, count = 0, 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            value = (value << 1) | (row >> i & 1)
            count += 1
            if count == 6:
                out.append(chr(value + 63))
                value, count = 0, 0
    if count:
        out.append(chr((value << (6 - count)) + 63))
    return ''.join(out)


def graph6_decode(text, line=None):
    """Parse one graph6 string; errors carry the byte offset."""
    data = text.rstrip('\r\n')
    start = len(HEADER) if data.startswith(HEADER) else 0
    if len(data) <= start:
        raise Graph6ParseError("empty graph6 string", start, line)
    for offset in range(start, len(data)):
        if not 63 <= ord(data[offset]) <= 126:
            raise Graph6ParseError(f"byte {data[offset]!r} outside the printable range 63..126", offset, line)

    pos = start
    if data[pos] != '~':
        n = ord(data[pos]) - 63
        pos += 1
    else:
        if len(data) > pos + 1 and data[pos + 1] == '~':
            raise Graph6ParseError("graphs beyond 258047 vertices are not supported", pos, line)
        if len(data) < pos + 4:
            raise Graph6ParseError("truncated size header", len(data), line)
        n = 0
        for k in range(1, 4):
            n = (n << 6) | (ord(data[pos + k]) - 63)
        pos += 4
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 header declares {n} vertices (limit {MAX_VERTICES})")

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != expected:
        raise Graph6ParseError(f"expected {expected} data bytes for n={n}, found {len(body)}",
                               pos + min(len(body), expected), line)

    rows = [0] * n
    bit = 0
    i, j = 0, 1
    for index, ch in enumerate(body):
        value = ord(ch) - 63
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if value >> shift & 1:
                    raise Graph6ParseError("non-zero padding bit", pos + index, line)
                continue
            if value >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))
