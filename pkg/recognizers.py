"""
Structure recognizers used as mu characterizations and rule inputs.
"""

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from graph_core import (
    CapacityError, PreconditionError, bits, popcount, components, induced_subgraph,
    k_minus_triangle,
)
from config import PATTERN_MAX_VERTICES


def has_cycle(g):
    return g.m > g.n - len(components(g))


def is_linear_forest(g):
    """Every component is a path."""
    return g.max_degree() <= 2 and not has_cycle(g)


def is_planar(g):
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    if g.n <= 4:
        return True
    is_planar_flag, _ = nx.check_planarity(g.to_networkx())
    return is_planar_flag


def is_outerplanar(g):
    """Planarity of g plus one apex vertex adjacent to everything."""
    if g.n >= 2 and g.m > 2 * g.n - 3:
        return False
    if g.n <= 3:
        return True
    apexed = g.to_networkx()
    apexed.add_edges_from(('apex', v) for v in range(g.n))
    is_planar_flag, _ = nx.check_planarity(apexed)
    return is_planar_flag


# ---------------------------------------------------------------------------
# Chordality
# ---------------------------------------------------------------------------

@dataclass
class ChordalAnalysis:
    is_chordal: bool
    peo: list = field(default_factory=list)  # empty unless chordal
    clique_number: int = 0
    simplicial_vertices: list = field(default_factory=list)


def lex_bfs(g):
    """Lexicographic breadth-first search order; ties go to the smallest vertex."""
    labels = [[] for _ in range(g.n)]
    unnumbered = g.vertex_mask()
    order = []
    for number in range(g.n, 0, -1):
        v = max(bits(unnumbered), key=lambda u: (labels[u], -u))
        order.append(v)
        unnumbered &= ~(1 << v)
        for w in bits(g.adj[v] & unnumbered):
            labels[w].append(number)
    return order


def _later_neighbours(g, peo):
    position = {v: i for i, v in enumerate(peo)}
    later = {}
    for v in peo:
        mask = 0
        for u in bits(g.adj[v]):
            if position[u] > position[v]:
                mask |= 1 << u
        later[v] = mask
    return position, later


def is_perfect_elimination_order(g, peo):
    position, later = _later_neighbours(g, peo)
    for v in peo:
        if not later[v]:
            continue
        parent = min(bits(later[v]), key=position.__getitem__)
        rest = later[v] & ~(1 << parent)
        if rest & ~g.adj[parent]:
            return False
    return True


def simplicial_vertices(g):
    return [v for v in range(g.n) if g.is_clique(bits(g.adj[v]))]


def chordal_analyze(g):
    peo = list(reversed(lex_bfs(g)))
    simplicial = simplicial_vertices(g)
    if not is_perfect_elimination_order(g, peo):
        return ChordalAnalysis(False, [], clique_number(g), simplicial)
    _, later = _later_neighbours(g, peo)
    omega = 1 + max((popcount(mask) for mask in later.values()), default=-1) if g.n else 0
    return ChordalAnalysis(True, peo, omega, simplicial)


def is_chordal(g):
    return is_perfect_elimination_order(g, list(reversed(lex_bfs(g))))


# ---------------------------------------------------------------------------
# Cliques
# ---------------------------------------------------------------------------

def _greedy_colouring(g, candidates):
    """Sequential colouring of the candidate set; (vertex, colour) pairs in colour order."""
    ordered = []
    uncoloured = candidates
    colour = 0
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            v = (available & -available).bit_length() - 1
            available &= ~g.adj[v] & ~(1 << v)
            uncoloured &= ~(1 << v)
            ordered.append((v, colour))
    return ordered


def clique_number(g):
    """Exact omega by branch and bound with greedy-colouring upper bounds."""
    if g.n == 0:
        return 0
    best = [1]

    def expand(size, candidates):
        for v, colour in reversed(_greedy_colouring(g, candidates)):
            if size + colour <= best[0]:
                return
            inner = candidates & g.adj[v]
            if inner:
                expand(size + 1, inner)
            elif size + 1 > best[0]:
                best[0] = size + 1
            candidates &= ~(1 << v)

    expand(0, g.vertex_mask())
    return best[0]


# ---------------------------------------------------------------------------
# Subgraph search
# ---------------------------------------------------------------------------

def _pattern_order(pattern):
    """Highest degree first, then the vertex most tied to those already placed."""
    degree = pattern.degrees()
    remaining = set(range(pattern.n))
    order = []
    placed = 0
    while remaining:
        v = max(remaining, key=lambda u: (popcount(pattern.adj[u] & placed), degree[u], -u))
        order.append(v)
        remaining.discard(v)
        placed |= 1 << v
    return order


def _embeds(host, pattern, induced):
    if pattern.n > PATTERN_MAX_VERTICES:
        raise CapacityError(f"patterns support at most {PATTERN_MAX_VERTICES} vertices, got {pattern.n}")
    if pattern.n > host.n or pattern.m > host.m:
        return False
    if pattern.n == 0:
        return True
    host_degree = host.degrees()
    pattern_degree = pattern.degrees()
    if induced:
        if len(pattern.non_edges()) > len(host.non_edges()):
            return False
    else:
        ranked_host = sorted(host_degree, reverse=True)
        ranked_pattern = sorted(pattern_degree, reverse=True)
        if any(p > h for p, h in zip(ranked_pattern, ranked_host)):
            return False

    order = _pattern_order(pattern)
    image = [0] * pattern.n
    full = host.vertex_mask()

    def extend(i, used):
        if i == len(order):
            return True
        p = order[i]
        candidates = full & ~used
        for q in order[:i]:
            if pattern.adj[p] >> q & 1:
                candidates &= host.adj[image[q]]
            elif induced:
                candidates &= ~host.adj[image[q]]
        for v in bits(candidates):
            if host_degree[v] < pattern_degree[p]:
                continue
            image[p] = v
            if extend(i + 1, used | (1 << v)):
                return True
        return False

    return extend(0, 0)


def contains_subgraph(g, pattern):
    """Some injection maps every pattern edge onto an edge of g."""
    return _embeds(g, pattern, induced=False)


def contains_induced(g, pattern):
    """Like contains_subgraph, and pattern non-edges land on non-edges."""
    return _embeds(g, pattern, induced=True)


# ---------------------------------------------------------------------------
# Chordal mu
# ---------------------------------------------------------------------------

def _has_induced_k_minus_triangle(g, analysis):
    """K_{omega+2} - triangle: an (omega-1)-clique with three independent common neighbours."""
    omega = analysis.clique_number
    if g.n < omega + 2:
        return False
    if omega + 2 <= PATTERN_MAX_VERTICES:
        return contains_induced(g, k_minus_triangle(omega + 2))
    _, later = _later_neighbours(g, analysis.peo)
    seen = set()
    for v in analysis.peo:
        maximal = list(bits(later[v] | (1 << v)))
        for clique in combinations(maximal, omega - 1):
            if clique in seen:
                continue
            seen.add(clique)
            common = g.vertex_mask()
            for c in clique:
                common &= g.adj[c]
            for a, b, c in combinations(list(bits(common)), 3):
                if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                    return True
    return False


def chordal_mu(g):
    """mu of a chordal graph: omega if K_{omega+2} - triangle is induced, else omega - 1 (per component)."""
    if not is_chordal(g):
        raise PreconditionError("chordal_mu needs a chordal graph")
    best = 0
    for comp in components(g):
        if len(comp) == 1:
            continue
        h = induced_subgraph(g, comp)
        analysis = chordal_analyze(h)
        omega = analysis.clique_number
        value = omega if _has_induced_k_minus_triangle(h, analysis) else omega - 1
        best = max(best, value)
    return best
