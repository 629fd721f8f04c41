"""
Simple graphs on at most 64 vertices.

Adjacency is stored as one integer bitset per vertex, so a graph is an
immutable value that can be hashed, compared and shipped to worker processes.
All operations return new graphs.
"""

from dataclasses import dataclass
from functools import cached_property
from math import comb

import networkx as nx

from config import MAX_VERTICES


class CapacityError(ValueError):
    """Raised when an input exceeds a fixed size limit."""


class PreconditionError(ValueError):
    """Raised when an operation is called outside its domain."""


def bits(mask):
    """Yield the indices of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count('1')


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graph has {self.n} vertices; supported range is 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise PreconditionError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise PreconditionError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise PreconditionError(f"vertex {v} has a loop")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise PreconditionError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n, edges):
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge {u}-{v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @cached_property
    def m(self):
        return sum(popcount(row) for row in self.adj) // 2

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def degree(self, v):
        return popcount(self.adj[v])

    def degrees(self):
        return [popcount(row) for row in self.adj]

    def min_degree(self):
        return min(self.degrees()) if self.n else 0

    def max_degree(self):
        return max(self.degrees()) if self.n else 0

    def neighbors(self, v):
        return list(bits(self.adj[v]))

    def edges(self):
        """Edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self):
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.adj[u] >> v & 1]

    def vertex_mask(self):
        return (1 << self.n) - 1

    def is_complete(self):
        return self.m == comb(self.n, 2)

    def is_edgeless(self):
        return self.m == 0

    def universal_vertices(self):
        full = self.vertex_mask()
        return [v for v in range(self.n) if self.adj[v] | (1 << v) == full]

    def is_clique(self, vertices):
        vertices = list(vertices)
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all((self.adj[v] | (1 << v)) & mask == mask for v in vertices)

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def complement(g):
    full = g.vertex_mask()
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g, h):
    if g.n + h.n > MAX_VERTICES:
        raise CapacityError(f"union would have {g.n + h.n} vertices (limit {MAX_VERTICES})")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g, h):
    """Disjoint union of g and h plus every edge between them."""
    if g.n + h.n > MAX_VERTICES:
        raise CapacityError(f"join would have {g.n + h.n} vertices (limit {MAX_VERTICES})")
    g_mask = g.vertex_mask()
    h_mask = h.vertex_mask() << g.n
    rows = [row | h_mask for row in g.adj] + [(row << g.n) | g_mask for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def add_edge(g, u, v):
    if u == v:
        raise PreconditionError(f"loop at vertex {u}")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def delete_edge(g, u, v):
    if not g.has_edge(u, v):
        raise PreconditionError(f"{u}-{v} is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def contract_edge(g, u, v):
    """Contract uv; the merged vertex is min(u, v) and later vertices shift down."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise PreconditionError(f"cannot contract {u}-{v}: not an edge")
    keep, drop = min(u, v), max(u, v)

    def relabel(x):
        if x == drop:
            x = keep
        return x - 1 if x > drop else x

    edges = set()
    for a, b in g.edges():
        a, b = relabel(a), relabel(b)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(g.n - 1, edges)


def induced_subgraph(g, vertices):
    """G[S] with vertices relabeled 0..|S|-1 in increasing order."""
    order = sorted(set(vertices))
    if not order:
        raise PreconditionError("induced subgraph needs a non-empty vertex set")
    if order[0] < 0 or order[-1] >= g.n:
        raise PreconditionError(f"vertex set {order} not inside 0..{g.n - 1}")
    position = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in bits(g.adj[v]):
            if u in position:
                row |= 1 << position[u]
        rows.append(row)
    return Graph(len(order), tuple(rows))


def delete_vertex(g, v):
    if not 0 <= v < g.n:
        raise PreconditionError(f"vertex {v} not in graph")
    if g.n == 1:
        return Graph(0, ())
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def components(g):
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = 0
    result = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        result.append(list(bits(comp)))
    return result


def is_connected(g):
    return g.n > 0 and len(components(g)) == 1


def is_isomorphic(g, h):
    # imported lazily: corpus depends on this module
    from corpus import canonical_form
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


@dataclass(frozen=True)
class CliqueSumSpec:
    """Glue instructions: left_clique[i] is identified with right_clique[i]."""
    left: Graph
    right: Graph
    left_clique: tuple
    right_clique: tuple

    @property
    def k(self):
        return len(self.left_clique)

    @property
    def pairing(self):
        return dict(zip(self.left_clique, self.right_clique))

    def validate(self):
        if len(self.left_clique) != len(self.right_clique):
            raise PreconditionError(
                f"clique sizes differ: {len(self.left_clique)} vs {len(self.right_clique)}")
        for name, graph, clique in (('left', self.left, self.left_clique),
                                    ('right', self.right, self.right_clique)):
            if len(set(clique)) != len(clique):
                raise PreconditionError(f"{name} clique repeats a vertex")
            if any(not 0 <= v < graph.n for v in clique):
                raise PreconditionError(f"{name} clique {clique} not inside the graph")
            if not graph.is_clique(clique):
                raise PreconditionError(f"{name} selection {clique} is not a clique")


def pure_clique_sum(spec):
    """Identify the two cliques; no edges are added or removed."""
    spec.validate()
    left, right = spec.left, spec.right
    total = left.n + right.n - spec.k
    if total > MAX_VERTICES:
        raise CapacityError(f"clique sum would have {total} vertices (limit {MAX_VERTICES})")
    mapping = {r: l for l, r in zip(spec.left_clique, spec.right_clique)}
    next_index = left.n
    for v in range(right.n):
        if v not in mapping:
            mapping[v] = next_index
            next_index += 1
    edges = set(left.edges())
    for a, b in right.edges():
        a, b = mapping[a], mapping[b]
        edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(total, edges)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def _check_order(n, minimum, name):
    if not minimum <= n <= MAX_VERTICES:
        raise PreconditionError(f"{name} needs {minimum} <= n <= {MAX_VERTICES}, got {n}")


def edgeless(n):
    _check_order(n, 0, 'edgeless')
    return Graph(n, (0,) * n)


def complete(n):
    _check_order(n, 0, 'complete')
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path(n):
    _check_order(n, 1, 'path')
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    _check_order(n, 3, 'cycle')
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(k):
    """K_{1,k} with center 0."""
    _check_order(k + 1, 1, 'star')
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_multipartite(parts):
    parts = list(parts)
    if not parts or any(p < 1 for p in parts):
        raise PreconditionError(f"part sizes must be positive, got {parts}")
    n = sum(parts)
    _check_order(n, 1, 'complete_multipartite')
    label = []
    for index, size in enumerate(parts):
        label.extend([index] * size)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if label[u] != label[v]])


def p32():
    """Three paths of length two sharing one end: center 0, middles 1-3, leaves 4-6."""
    return Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def k_minus_triangle(t):
    """K_t without the triangle on its last three vertices."""
    if t < 3:
        raise PreconditionError(f"K_t - triangle needs t >= 3, got {t}")
    _check_order(t, 3, 'k_minus_triangle')
    triangle = {t - 3, t - 2, t - 1}
    return Graph.from_edges(t, [(u, v) for u in range(t) for v in range(u + 1, t)
                                if not (u in triangle and v in triangle)])


class LinearCongruential:
    """Deterministic face chooser for stacked triangulations (glibc constants)."""

    def __init__(self, seed):
        self.state = seed & 0x7FFFFFFF

    def next(self):
        self.state = (1103515245 * self.state + 12345) & 0x7FFFFFFF
        return self.state


def stacked_triangulation(n, seed=0):
    """Edge-maximal planar graph: K_4 plus repeated insertion of a vertex into a face."""
    if n < 4:
        raise PreconditionError(f"stacked triangulation needs n >= 4, got {n}")
    _check_order(n, 4, 'stacked_triangulation')
    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    rng = LinearCongruential(seed)
    for v in range(4, n):
        a, b, c = faces.pop(rng.next() % len(faces))
        edges.extend([(a, v), (b, v), (c, v)])
        faces.extend([(a, b, v), (a, c, v), (b, c, v)])
    return Graph.from_edges(n, edges)


def petersen():
    """Outer 5-cycle 0-4, spokes i-(i+5), inner pentagram on 5-9."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def k33():
    return complete_multipartite([3, 3])


def k331():
    return complete_multipartite([3, 3, 1])


def k44_minus_edge():
    """K_{4,4} with parts 0-3 and 4-7, minus the edge 3-7."""
    return delete_edge(complete_multipartite([4, 4]), 3, 7)


def wheel(n):
    """Hub 0 joined to a cycle on 1..n-1."""
    _check_order(n, 4, 'wheel')
    return join(complete(1), cycle(n - 1))


NAMED_GRAPHS = {
    'petersen': petersen,
    'p32': p32,
    'k33': k33,
    'k331': k331,
    'k44-e': k44_minus_edge,
    'k22222': lambda: complete_multipartite([2, 2, 2, 2, 2]),
    'k122222': lambda: complete_multipartite([1, 2, 2, 2, 2, 2]),
    'k22233': lambda: complete_multipartite([2, 2, 2, 3, 3]),
    'k2222': lambda: complete_multipartite([2, 2, 2, 2]),
    'k2233': lambda: complete_multipartite([2, 2, 3, 3]),
    'k113': lambda: complete_multipartite([1, 1, 3]),
}


def named_graph(name):
    """Look up a named graph; also accepts K<n>, P<n>, C<n> and S<k> (star)."""
    key = name.lower()
    if key in NAMED_GRAPHS:
        return NAMED_GRAPHS[key]()
    builders = {'k': complete, 'p': path, 'c': cycle, 's': star}
    if key[:1] in builders and key[1:].isdigit():
        return builders[key[:1]](int(key[1:]))
    raise PreconditionError(f"unknown graph name '{name}'")


def graph_name(g):
    """K_n, C_n, P_n or a key of NAMED_GRAPHS when g is one of those, else None."""
    if g.n == 0:
        return None
    if g.is_complete():
        return f"K_{g.n}"
    degrees = g.degrees()
    if is_connected(g) and max(degrees) <= 2:
        return f"C_{g.n}" if g.m == g.n else f"P_{g.n}"
    for key, build in NAMED_GRAPHS.items():
        h = build()
        if h.n == g.n and h.m == g.m and sorted(h.degrees()) == sorted(degrees) \
                and nx.is_isomorphic(g.to_networkx(), h.to_networkx()):
            return key
    return None
