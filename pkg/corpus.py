"""
Graph corpora: exhaustive enumeration up to isomorphism, graph6 files, and the
canonical form used for deduplication and memo keys.
"""

import logging

import numpy as np

from graph_core import Graph, CapacityError, bits, add_edge, edgeless
from graph6 import graph6_decode, graph6_encode, Graph6ParseError
from config import CANONICAL_MAX_VERTICES, ENUMERATION_MAX_N

logger = logging.getLogger(__name__)


class GraphStream:
    """Re-iterable, deterministic source of graphs."""

    def __init__(self, source, factory, length=None):
        self.source = source
        self._factory = factory
        self.length = length

    def __iter__(self):
        return iter(self._factory())

    def __repr__(self):
        return f"GraphStream({self.source!r})"


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------

def _refined_cells(g):
    """Colour refinement started from degrees; cells come out in a canonical order."""
    colour = [bin(row).count('1') for row in g.adj]
    while True:
        signature = [(colour[v], tuple(sorted(colour[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signature)))}
        refined = [ranking[sig] for sig in signature]
        if len(set(refined)) == len(set(colour)):
            colour = refined
            break
        colour = refined
    cells = {}
    for v in range(g.n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _twin_classes(g):
    """Map each vertex to a representative of its twin class (same open or closed neighbourhood)."""
    by_open, by_closed = {}, {}
    for v, row in enumerate(g.adj):
        by_open.setdefault(row, []).append(v)
        by_closed.setdefault(row | (1 << v), []).append(v)
    twin = list(range(g.n))
    for groups in (by_open, by_closed):
        for members in groups.values():
            if len(members) > 1:
                for v in members:
                    twin[v] = members[0]
    return twin


def _canonical_search(g):
    """Lexicographically least column string over cell-respecting orders.

    Returns (columns, order) where order[p] is the vertex placed at position p.
    """
    slot_cell = []
    for cell in _refined_cells(g):
        mask = 0
        for v in cell:
            mask |= 1 << v
        slot_cell.extend([mask] * len(cell))
    twin = _twin_classes(g)

    states = [((), 0)]
    columns = []
    for j in range(g.n):
        best, survivors = None, []
        for order, used in states:
            tried = set()
            for v in bits(slot_cell[j] & ~used):
                if twin[v] in tried:
                    continue
                tried.add(twin[v])
                row = g.adj[v]
                col = 0
                for p in order:
                    col = (col << 1) | (row >> p & 1)
                if best is None or col < best:
                    best, survivors = col, [(order + (v,), used | (1 << v))]
                elif col == best:
                    survivors.append((order + (v,), used | (1 << v)))
        states = survivors
        columns.append(best)
    return columns, states[0][0]


def canonical_form(g):
    """Upper-triangle bitstring (graph6 column order) that is equal exactly for isomorphic graphs."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise CapacityError(f"canonical form supports n <= {CANONICAL_MAX_VERTICES}, got {g.n}")
    columns, _ = _canonical_search(g)
    return ''.join(format(col, f'0{j}b') for j, col in enumerate(columns) if j)


def canonical_graph(g):
    """The canonical relabeling of g."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise CapacityError(f"canonical form supports n <= {CANONICAL_MAX_VERTICES}, got {g.n}")
    _, order = _canonical_search(g)
    position = {v: p for p, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(g.n, tuple(rows))


def graph_key(g):
    """Memo key: canonical form when affordable, the labeled adjacency otherwise."""
    if g.n <= CANONICAL_MAX_VERTICES:
        return (g.n, canonical_form(g))
    return (g.n, g.adj)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _enumerate(n):
    level = {canonical_form(edgeless(n)): edgeless(n)}
    max_edges = n * (n - 1) // 2
    for m in range(max_edges + 1):
        for key in sorted(level):
            yield level[key]
        if m == max_edges:
            break
        following = {}
        for rep in level.values():
            for u, v in rep.non_edges():
                grown = add_edge(rep, u, v)
                key = canonical_form(grown)
                if key not in following:
                    following[key] = canonical_graph(grown)
        logger.debug("n=%d: %d classes with %d edges", n, len(following), m + 1)
        level = following


KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def enumerate_graphs(n):
    """All isomorphism classes on n vertices, by edge count then canonical form."""
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise CapacityError(f"enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, got {n}")
    return GraphStream(f"enumerate n={n}", lambda: _enumerate(n), KNOWN_COUNTS[n])


def enumerate_up_to(n_max):
    def chain():
        for n in range(1, n_max + 1):
            yield from _enumerate(n)
    if not 1 <= n_max <= ENUMERATION_MAX_N:
        raise CapacityError(f"enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, got {n_max}")
    return GraphStream(f"enumerate n<={n_max}", chain, sum(KNOWN_COUNTS[k] for k in range(1, n_max + 1)))


# ---------------------------------------------------------------------------
# graph6 files
# ---------------------------------------------------------------------------

def _read_lines(path):
    with open(path, 'r', encoding='ascii') as f:
        for line_no, line in enumerate(f, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                yield graph6_decode(text, line=line_no)
            except Graph6ParseError:
                logger.error("aborting read of %s at line %d", path, line_no)
                raise


def read_graph6(path):
    """Graphs of a graph6 file in file order; a bad line aborts with its line number."""
    return GraphStream(str(path), lambda: _read_lines(path))


def write_graph6(path, graphs):
    count = 0
    with open(path, 'w', encoding='ascii') as f:
        for g in graphs:
            f.write(graph6_encode(g) + '\n')
            count += 1
    return count


def random_graphs(n, count, seed=0, p=0.5):
    """Deterministic G(n, p) sample, used for spot checks and n=8 campaigns."""
    def generate():
        rng = np.random.default_rng(seed)
        for _ in range(count):
            coins = rng.random(n * (n - 1) // 2) < p
            pairs = [(u, v) for v in range(1, n) for u in range(v)]
            yield Graph.from_edges(n, [pair for pair, keep in zip(pairs, coins) if keep])
    return GraphStream(f"random n={n} count={count} seed={seed}", generate, count)
