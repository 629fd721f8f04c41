"""
Rule catalogue for the mu engine.

Each rule takes (g, ctx) and returns a list of Contribution records. A rule
only ever states facts that hold for mu(g); the engine intersects them.
"""

import logging
from dataclasses import dataclass
from math import comb

from graph_core import (
    CapacityError, PreconditionError, complement, components, delete_vertex, induced_subgraph,
    k33, p32,
)
from corpus import canonical_form
from recognizers import (
    is_linear_forest, is_outerplanar, is_planar, is_chordal, chordal_mu, has_cycle,
    contains_subgraph,
)
from minors import hadwiger_number, is_petersen_family_free
from certificates import verify_certificate, search_certificate
from config import MINOR_HOST_MAX_VERTICES, CERT_SEARCH_MAX_VERTICES

logger = logging.getLogger(__name__)

LOWER = 'lo'
UPPER = 'hi'

K33_FORM = canonical_form(k33())


@dataclass(frozen=True)
class Contribution:
    rule_id: str
    bound: int
    direction: str  # LOWER or UPPER
    note: str = ''


def _both(rule_id, lo, hi, note):
    return [Contribution(rule_id, lo, LOWER, note), Contribution(rule_id, hi, UPPER, note)]


class RuleEngine:
    def __init__(self, rules=None):
        self.rules = rules or []

    def add_rule(self, rule_func):
        self.rules.append(rule_func)

    def evaluate(self, g, ctx, accept):
        """Run rules in order, feeding contributions to accept(); stop when accept returns True."""
        for rule in self.rules:
            try:
                contributions = rule(g, ctx)
            except (CapacityError, PreconditionError) as e:
                logger.debug("%s skipped on n=%d: %s", rule.rule_id, g.n, e)
                continue
            if contributions and accept(contributions):
                return True
        return False


def rule(rule_id):
    def register(func):
        func.rule_id = rule_id
        RULES[rule_id] = func
        return func
    return register


RULES = {}


# ---------------------------------------------------------------------------
# Rules
# ---------------------------------------------------------------------------

@rule('R1')
def components_rule(g, ctx):
    """mu is the maximum over connected components."""
    parts = components(g)
    if len(parts) < 2:
        return []
    child = [ctx.bounds(induced_subgraph(g, part)) for part in parts]
    return _both('R1', max(b.lo for b in child), max(b.hi for b in child),
                 f"max over {len(parts)} components")


@rule('R2')
def complete_rule(g, ctx):
    """mu(K_t) = t - 1; every graph is a subgraph of K_n and has K_2 once it has an edge."""
    if g.is_complete():
        return _both('R2', g.n - 1, g.n - 1, f"complete graph K_{g.n}")
    contributions = [Contribution('R2', g.n - 1, UPPER, f"subgraph of K_{g.n}")]
    if g.m:
        contributions.append(Contribution('R2', 1, LOWER, "has an edge (K_2 minor)"))
    return contributions


@rule('R3')
def universal_vertex_rule(g, ctx):
    """Peel a universal vertex when the remainder still has an edge."""
    universal = g.universal_vertices()
    if not universal or g.n < 3:
        return []
    rest = delete_vertex(g, universal[0])
    if rest.is_edgeless():
        return []
    b = ctx.bounds(rest)
    return _both('R3', b.lo + 1, b.hi + 1, f"universal vertex {universal[0]}")


def ladder_bounds(g, minor_budget, petersen_rung=True):
    """(lo, hi, lo_note, hi_note) from the linear forest / outerplanar / planar / linkless ladder."""
    if g.is_edgeless():
        return 0, 0, "edgeless", "edgeless"
    lo, lo_note = 1, "has an edge"
    rungs = [(1, is_linear_forest, "linear forest"),
             (2, is_outerplanar, "outerplanar"),
             (3, is_planar, "planar")]
    for level, test, name in rungs:
        if test(g):
            return lo, level, lo_note, name
        lo, lo_note = level + 1, f"not {name}"
    if not petersen_rung or g.n > MINOR_HOST_MAX_VERTICES:
        return lo, None, lo_note, None
    free = is_petersen_family_free(g, minor_budget)
    if free is None:
        return lo, None, lo_note + "; Petersen-family search inconclusive", None
    if free:
        return lo, 4, lo_note, "no Petersen-family minor"
    return 5, None, "has a Petersen-family minor", None


@rule('R4')
def ladder_rule(g, ctx):
    lo, hi, lo_note, hi_note = ladder_bounds(g, ctx.config.minor_budget)
    contributions = [Contribution('R4', lo, LOWER, lo_note)]
    if hi is not None:
        contributions.append(Contribution('R4', hi, UPPER, hi_note))
    return contributions


@rule('R5')
def hadwiger_rule(g, ctx):
    """mu >= h(G) - 1."""
    if g.n > MINOR_HOST_MAX_VERTICES:
        return []
    bracket = hadwiger_number(g, ctx.config.minor_budget)
    note = f"K_{bracket.lower} minor" + ("" if bracket.exact else f" (h <= {bracket.upper})")
    return [Contribution('R5', bracket.lower - 1, LOWER, note)]


def edge_count_bound(h):
    """Largest k with C(k+1, 2) <= |E(h)|, or 4 for K_{3,3}."""
    if h.n == 6 and h.m == 9 and canonical_form(h) == K33_FORM:
        return 4
    k = 0
    while comb(k + 2, 2) <= h.m:
        k += 1
    return k


@rule('R6')
def edge_count_rule(g, ctx):
    bound = max(edge_count_bound(induced_subgraph(g, part)) for part in components(g))
    return [Contribution('R6', bound, UPPER, f"{g.m} edges")]


@rule('R7')
def chordal_rule(g, ctx):
    if not is_chordal(g):
        return []
    value = chordal_mu(g)
    return _both('R7', value, value, "chordal")


@rule('R8')
def co_chordal_rule(g, ctx):
    """Chordal complement: mu(G) + mu(complement) >= n - 2."""
    gc = complement(g)
    if not is_chordal(gc):
        return []
    value = chordal_mu(gc)
    return [Contribution('R8', g.n - 2 - value, LOWER, f"complement is chordal with mu {value}")]


@rule('R9')
def small_complement_rule(g, ctx):
    """Complement with mu <= 3 (planar): mu(G) >= n - 2 - mu(complement)."""
    gc = complement(g)
    _, hi, _, note = ladder_bounds(gc, ctx.config.minor_budget, petersen_rung=False)
    if hi is None:
        return []
    return [Contribution('R9', g.n - 2 - hi, LOWER, f"complement is {note}, mu <= {hi}")]


@rule('R10')
def sparse_complement_rule(g, ctx):
    """Complement without a cycle and without a P_{3,2} subgraph: mu(G) >= n - 3."""
    gc = complement(g)
    if has_cycle(gc) or contains_subgraph(gc, p32()):
        return []
    return [Contribution('R10', g.n - 3, LOWER, "complement is a forest without P_{3,2}")]


@rule('R11')
def vertex_deletion_rule(g, ctx):
    """mu(G) <= mu(G - v) + 1; G - v is a minor so also mu(G) >= mu(G - v)."""
    depth = ctx.depth
    if depth <= 0 or g.n < 2:
        return []
    lo, hi = 0, None
    for v in range(g.n):
        rest = delete_vertex(g, v)
        b = ctx.bounds(rest, depth - 1)
        # mu of an edgeless graph on 2+ vertices is 1 as a matrix parameter
        child_hi = max(b.hi, 1) if rest.is_edgeless() and rest.n >= 2 else b.hi
        lo = max(lo, b.lo)
        hi = child_hi + 1 if hi is None else min(hi, child_hi + 1)
    return [Contribution('R11', lo, LOWER, "largest vertex-deleted lower bound"),
            Contribution('R11', hi, UPPER, f"vertex deletion, depth {depth}")]


@rule('R12')
def certificate_rule(g, ctx):
    contributions = []
    for cert in ctx.certificates_for(g):
        verdict = verify_certificate(cert)
        if verdict.valid:
            contributions.append(Contribution('R12', verdict.corank, LOWER, "verified certificate"))
        else:
            logger.warning("supplied certificate rejected: %s %s", verdict.failure, verdict.details)
    if ctx.config.certificate_search and g.n <= CERT_SEARCH_MAX_VERTICES:
        current = ctx.current
        target = max([current.lo] + [c.bound for c in contributions]) + 1
        if target <= current.hi and target < g.n:
            found = search_certificate(g, target, ctx.config.certificate_budget)
            if found is not None:
                contributions.append(Contribution('R12', found.claimed_corank, LOWER, "searched certificate"))
    return contributions
