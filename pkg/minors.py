"""
Minor containment for small hosts, Hadwiger numbers and the Petersen family.

has_minor answers True, False or None; None means the node budget ran out
before the search finished and nothing is known.
"""

import logging
from dataclasses import dataclass

from graph_core import (
    Graph, CapacityError, complete, complete_multipartite, k44_minus_edge, petersen,
    contract_edge, delete_vertex, induced_subgraph, components,
)
from corpus import graph_key, canonical_form
from recognizers import contains_subgraph, clique_number
from config import MINOR_BUDGET, MINOR_HOST_MAX_VERTICES

logger = logging.getLogger(__name__)


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class MinorQuery:
    host: Graph
    pattern: Graph
    budget: int = MINOR_BUDGET


class _MinorSearch:
    """Delete/contract search over minors of the host, memoized on graph keys."""

    def __init__(self, pattern, budget):
        self.pattern = pattern
        self.budget = budget
        self.expanded = 0
        self.failed = set()
        self.pattern_min_degree = pattern.min_degree()
        self.pattern_connected = len(components(pattern)) == 1
        self.pattern_complete = pattern.is_complete()

    def _reduce(self, g):
        """Drop vertices no model can need; fold degree-2 vertices into a neighbour."""
        changed = True
        while changed and g.n > self.pattern.n:
            changed = False
            for v in range(g.n):
                d = g.degree(v)
                if (d == 0 and self.pattern_min_degree >= 1) or (d == 1 and self.pattern_min_degree >= 2):
                    g = delete_vertex(g, v)
                    changed = True
                    break
                if d == 2 and self.pattern_min_degree >= 3:
                    g = contract_edge(g, v, g.neighbors(v)[0])
                    changed = True
                    break
        return g

    def _is_subgraph(self, g):
        if self.pattern_complete:
            return clique_number(g) >= self.pattern.n
        return contains_subgraph(g, self.pattern)

    def search(self, g):
        g = self._reduce(g)
        if g.n < self.pattern.n or g.m < self.pattern.m:
            return False
        if self.pattern_connected and g.n > 1:
            parts = components(g)
            if len(parts) > 1:
                return any(self.search(induced_subgraph(g, part)) for part in parts
                           if len(part) >= self.pattern.n)

        key = graph_key(g)
        if key in self.failed:
            return False
        self.expanded += 1
        if self.expanded > self.budget:
            raise _BudgetExhausted()

        if self._is_subgraph(g):
            return True
        if g.n == self.pattern.n:
            self.failed.add(key)
            return False

        children = {}
        for v in range(g.n):
            child = delete_vertex(g, v)
            children.setdefault(graph_key(child), child)
        for u, v in g.edges():
            child = contract_edge(g, u, v)
            children.setdefault(graph_key(child), child)
        # denser children first: they are closer to containing the pattern
        for child in sorted(children.values(), key=lambda h: -h.m):
            if self.search(child):
                return True
        self.failed.add(key)
        return False


def has_minor(host, pattern, budget=MINOR_BUDGET):
    """True/False when the search completes within budget expanded nodes, else None."""
    if host.n > MINOR_HOST_MAX_VERTICES:
        raise CapacityError(f"minor search supports hosts up to {MINOR_HOST_MAX_VERTICES} vertices, got {host.n}")
    if pattern.n > host.n or pattern.m > host.m:
        return False
    search = _MinorSearch(pattern, budget)
    try:
        found = search.search(host)
    except _BudgetExhausted:
        logger.warning("minor search exhausted its budget of %d nodes (host n=%d m=%d, pattern n=%d m=%d)",
                       budget, host.n, host.m, pattern.n, pattern.m)
        return None
    logger.debug("minor search: %s after %d nodes", found, search.expanded)
    return found


def run_query(query):
    return has_minor(query.host, query.pattern, query.budget)


@dataclass(frozen=True)
class HadwigerBracket:
    lower: int
    upper: int

    @property
    def exact(self):
        return self.lower == self.upper

    @property
    def value(self):
        return self.lower if self.exact else None


def _edge_limited_order(g):
    t = 0
    while t + 1 <= g.n and (t + 1) * t // 2 <= g.m:
        t += 1
    return t


def hadwiger_number(g, budget=MINOR_BUDGET):
    """Largest t with K_t a minor of g, bracketed when the budget bites."""
    lower = clique_number(g)
    upper = _edge_limited_order(g)
    t = lower + 1
    while t <= upper:
        answer = has_minor(g, complete(t), budget)
        if answer is None:
            return HadwigerBracket(lower, upper)
        if not answer:
            return HadwigerBracket(lower, t - 1)
        lower = t
        t += 1
    return HadwigerBracket(lower, lower)


# ---------------------------------------------------------------------------
# Petersen family
# ---------------------------------------------------------------------------

def _from_pairs(n, pairs):
    return Graph.from_edges(n, [(int(p[0]), int(p[1])) for p in pairs.split()])


def _k6_y_delta():
    # K_6 with the triangle 0,1,2 replaced by a claw centred at 6
    edges = [(u, v) for u in range(6) for v in range(u + 1, 6) if not (u < 3 and v < 3)]
    return Graph.from_edges(7, edges + [(0, 6), (1, 6), (2, 6)])


def petersen_family():
    """The seven forbidden minors of linklessly embeddable graphs, 15 edges each."""
    return [
        complete(6),
        _k6_y_delta(),
        complete_multipartite([3, 3, 1]),
        _from_pairs(8, "05 13 14 15 23 24 25 35 45 06 16 26 07 37 47"),
        k44_minus_edge(),
        _from_pairs(9, "05 13 23 24 25 35 06 16 26 07 37 47 18 48 58"),
        petersen(),
    ]


def _check_family():
    family = petersen_family()
    forms = {canonical_form(member) for member in family}
    if len(family) != 7 or any(member.m != 15 for member in family) or len(forms) != 7:
        raise RuntimeError("Petersen family data is corrupt")


_check_family()


def is_petersen_family_free(g, budget=MINOR_BUDGET):
    """True iff no family member is a minor; None if some search ran out of budget."""
    if g.m < 15:
        return True
    unknown = False
    for member in petersen_family():
        if member.n > g.n:
            continue
        answer = has_minor(g, member, budget)
        if answer:
            return False
        if answer is None:
            unknown = True
    return None if unknown else True
