"""
mu engine: intersects every enabled rule's bound into an interval [lo, hi].
"""

import importlib
import logging
from dataclasses import dataclass, field

from graph_core import PreconditionError
from corpus import graph_key
from config import (
    DEFAULT_RULES, MINOR_BUDGET, DELETION_DEPTH, EDGELESS_CONVENTION, CERT_SEARCH_BUDGET,
    RULE_DESCRIPTIONS,
)

engines_rules = importlib.import_module('engines-rules')
RuleEngine = engines_rules.RuleEngine
RULES = engines_rules.RULES
Contribution = engines_rules.Contribution
LOWER = engines_rules.LOWER
UPPER = engines_rules.UPPER

logger = logging.getLogger(__name__)

CONVENTIONS = ('paper', 'matrix')


class EngineInconsistencyError(ValueError):
    """lo > hi: some rule claimed something false."""

    def __init__(self, g, trace):
        self.graph = g
        self.trace = list(trace)
        dump = "\n".join(f"  {c.rule_id} {c.direction} {c.bound}: {c.note}" for c in self.trace)
        super().__init__(f"inconsistent bounds for {g}:\n{dump}")


@dataclass
class MuBounds:
    lo: int
    hi: int
    trace: list = field(default_factory=list)

    @property
    def resolved(self):
        return self.lo == self.hi

    @property
    def value(self):
        return self.lo if self.resolved else None

    def __str__(self):
        return f"mu = {self.lo}" if self.resolved else f"mu in [{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class EngineConfig:
    enabled_rules: tuple = tuple(DEFAULT_RULES)
    minor_budget: int = MINOR_BUDGET
    deletion_depth: int = DELETION_DEPTH
    edgeless_convention: str = EDGELESS_CONVENTION
    certificate_search: bool = False
    certificate_budget: int = CERT_SEARCH_BUDGET

    def __post_init__(self):
        if self.edgeless_convention not in CONVENTIONS:
            raise PreconditionError(f"edgeless convention must be one of {CONVENTIONS}")
        unknown = [r for r in self.enabled_rules if r not in RULES]
        if unknown:
            raise PreconditionError(f"unknown rules: {unknown}")
        if self.deletion_depth < 0:
            raise PreconditionError("deletion depth must be >= 0")


class _Evaluation:
    """State of one (graph, depth) evaluation, handed to the rules."""

    def __init__(self, engine, g, depth):
        self.engine = engine
        self.config = engine.config
        self.depth = depth
        self.current = MuBounds(0, g.n - 1)

    def bounds(self, h, depth=None):
        return self.engine.bounds(h, self.depth if depth is None else depth)

    def certificates_for(self, g):
        return self.engine.certificates_for(g)

    def accept(self, contributions):
        current = self.current
        for c in contributions:
            current.trace.append(c)
            if c.direction == LOWER and c.bound > current.lo:
                current.lo = c.bound
            elif c.direction == UPPER and c.bound < current.hi:
                current.hi = c.bound
            logger.debug("%s %s %d (%s)", c.rule_id, c.direction, c.bound, c.note)
        return current.lo >= current.hi


class MuEngine:
    """Memoized mu bounds under one configuration."""

    def __init__(self, config=None, certificates=()):
        self.config = config or EngineConfig()
        ordered = [RULES[r] for r in DEFAULT_RULES if r in self.config.enabled_rules]
        ordered += [RULES[r] for r in self.config.enabled_rules if r not in DEFAULT_RULES]
        self.rules = RuleEngine(ordered)
        self._certificates = {}
        self._memo = {}
        for cert in certificates:
            self.add_certificate(cert)

    def add_certificate(self, cert):
        self._certificates.setdefault(graph_key(cert.graph), []).append(cert)
        self._memo.clear()

    def certificates_for(self, g):
        return self._certificates.get(graph_key(g), [])

    def _edgeless(self, g):
        if self.config.edgeless_convention == 'matrix' and g.n >= 2:
            value, note = 1, "edgeless, matrix convention"
        else:
            value, note = 0, "edgeless"
        return MuBounds(value, value, [Contribution('R4', value, LOWER, note),
                                       Contribution('R4', value, UPPER, note)])

    def bounds(self, g, depth=None):
        if g.n == 0:
            raise PreconditionError("mu is undefined for the null graph")
        depth = self.config.deletion_depth if depth is None else depth
        key = (graph_key(g), depth)
        if key in self._memo:
            return self._memo[key]
        if g.is_edgeless():
            result = self._edgeless(g)
        else:
            evaluation = _Evaluation(self, g, depth)
            self.rules.evaluate(g, evaluation, evaluation.accept)
            result = evaluation.current
            if result.lo > result.hi:
                logger.error("engine inconsistency on %s", g)
                raise EngineInconsistencyError(g, result.trace)
        self._memo[key] = result
        return result


def mu_bounds(g, config=None, certificates=()):
    return MuEngine(config, certificates).bounds(g)


def explain(g, config=None, certificates=()):
    """Human-readable trace of the rules that fired and the final interval."""
    result = MuEngine(config, certificates).bounds(g)
    lines = [f"graph: n={g.n} m={g.m}"]
    for c in result.trace:
        sign = '>=' if c.direction == LOWER else '<='
        lines.append(f"  {c.rule_id:<4} mu {sign} {c.bound}  {c.note}  [{RULE_DESCRIPTIONS.get(c.rule_id, '')}]")
    lines.append(str(result))
    return "\n".join(lines)
