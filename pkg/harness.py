"""
Verification campaigns for the edge bound |E| <= t*n - C(t+1, 2) with t = mu(G),
plus the extremal-family checks and sweeps that cross-check the engine.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

import numpy as np
import pandas as pd
from tqdm import tqdm

from graph_core import (
    CliqueSumSpec, pure_clique_sum, complement, complete, complete_multipartite, join,
    stacked_triangulation, is_connected, k33, p32,
)
from corpus import canonical_form, enumerate_up_to, random_graphs
from graph6 import graph6_encode
from recognizers import is_chordal, chordal_mu, has_cycle, contains_subgraph
from minors import hadwiger_number
from engine import MuEngine, EngineConfig
from report import JsonlSink, summarize_records
from config import (
    DEFAULT_RULES, EXPENSIVE_RULES, CANONICAL_MAX_VERTICES, CAMPAIGN_WORKERS, MINOR_BUDGET,
)

logger = logging.getLogger(__name__)

HOLDS = 'Holds'
VIOLATES = 'Violates'
INCONCLUSIVE = 'Inconclusive'

CHEAP_RULES = tuple(r for r in DEFAULT_RULES if r not in EXPENSIVE_RULES)


class CampaignViolationError(ValueError):
    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"edge bound violated by {verdict.canon}: n={verdict.n} m={verdict.m} "
                         f"mu in [{verdict.bounds.lo}, {verdict.bounds.hi}] "
                         f"(trace: {verdict.rules_fired})")


def edge_bound(t, n):
    """t*n - C(t+1, 2); nondecreasing in t for t <= n - 1."""
    return t * n - comb(t + 1, 2)


def graph_label(g):
    return canonical_form(g) if g.n <= CANONICAL_MAX_VERTICES else graph6_encode(g)


@dataclass
class Verdict:
    canon: str
    n: int
    m: int
    bounds: object
    outcome: str
    tags: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)
    elapsed_micros: int = 0

    @property
    def rules_fired(self):
        return sorted({c.rule_id for c in self.bounds.trace}, key=lambda r: int(r[1:]))

    def to_record(self):
        return {
            'canon': self.canon,
            'n': self.n,
            'm': self.m,
            'lo': self.bounds.lo,
            'hi': self.bounds.hi,
            'outcome': self.outcome,
            'tags': self.tags,
            'rulesFired': self.rules_fired,
            'elapsedMicros': self.elapsed_micros,
        }


def class_tags(g, bounds):
    tags = []
    if is_chordal(g):
        tags.append('chordal')
    if is_chordal(complement(g)):
        tags.append('coChordal')
    if bounds.hi <= 7:
        tags.append('muAtMost7')
    if bounds.lo >= g.n - 6:
        tags.append('muAtLeastNminus6')
    return tags


def check_conjecture(g, bounds):
    """Holds if the bound holds at lo, Violates if it fails at hi, else Inconclusive."""
    lower_limit = edge_bound(bounds.lo, g.n)
    upper_limit = edge_bound(bounds.hi, g.n)
    if g.m <= lower_limit:
        outcome = HOLDS
    elif g.m > upper_limit:
        outcome = VIOLATES
    else:
        outcome = INCONCLUSIVE
    detail = {'limit_at_lo': lower_limit, 'limit_at_hi': upper_limit}
    return Verdict(graph_label(g), g.n, g.m, bounds, outcome, class_tags(g, bounds), detail)


def minimal_counterexample_filter(g, bounds, all_smaller_verified):
    """False when g cannot be a vertex-minimal counterexample: some degree <= lo, or a universal vertex."""
    if not all_smaller_verified:
        return True
    return g.min_degree() > bounds.lo and g.max_degree() < g.n - 1


# ---------------------------------------------------------------------------
# Campaigns
# ---------------------------------------------------------------------------

@dataclass
class CampaignReport:
    source: str
    records: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)


_WORKER = {}


def _init_worker(config, use_degree_filter):
    _WORKER['engine'] = MuEngine(config)
    _WORKER['cheap'] = MuEngine(EngineConfig(enabled_rules=CHEAP_RULES, minor_budget=config.minor_budget,
                                             deletion_depth=0,
                                             edgeless_convention=config.edgeless_convention))
    _WORKER['degree_filter'] = use_degree_filter


def _verdict_for(g):
    started = time.perf_counter()
    verdict = None
    if _WORKER['degree_filter']:
        cheap = _WORKER['cheap'].bounds(g)
        if not minimal_counterexample_filter(g, cheap, True):
            verdict = check_conjecture(g, cheap)
            if verdict.outcome != HOLDS:
                verdict.outcome = HOLDS
                verdict.detail['reason'] = 'not a minimal counterexample (degree filter)'
    if verdict is None:
        verdict = check_conjecture(g, _WORKER['engine'].bounds(g))
    verdict.elapsed_micros = int((time.perf_counter() - started) * 1e6)
    return verdict


def run_campaign(stream, config=None, jsonl_path=None, workers=CAMPAIGN_WORKERS,
                 use_degree_filter=False, progress=True):
    """Verdict for every graph of stream, written to JSONL in input order.

    A Violates verdict is flushed and then raises CampaignViolationError.
    """
    config = config or EngineConfig()
    report = CampaignReport(getattr(stream, 'source', str(stream)))
    started = time.perf_counter()
    total = getattr(stream, 'length', None)

    with JsonlSink(jsonl_path) as sink:
        if workers > 1:
            pool = ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                       initargs=(config, use_degree_filter))
            verdicts = pool.map(_verdict_for, stream, chunksize=16)
        else:
            pool = None
            _init_worker(config, use_degree_filter)
            verdicts = (_verdict_for(g) for g in stream)
        try:
            for verdict in tqdm(verdicts, total=total, desc=report.source, disable=not progress, unit='graph'):
                record = verdict.to_record()
                report.records.append(record)
                sink.write(record)
                if verdict.outcome == INCONCLUSIVE:
                    logger.warning("inconclusive: %s n=%d m=%d mu in [%d, %d]", verdict.canon, verdict.n,
                                   verdict.m, verdict.bounds.lo, verdict.bounds.hi)
                elif verdict.outcome == VIOLATES:
                    logger.error("VIOLATION: %s", record)
                    raise CampaignViolationError(verdict)
        finally:
            if pool is not None:
                pool.shutdown(cancel_futures=True)

    report.summary = summarize_records(report.records)
    report.summary['runtime_seconds'] = round(time.perf_counter() - started, 3)
    report.summary['source'] = report.source
    logger.info("campaign %s: %s", report.source, report.summary)
    return report


# ---------------------------------------------------------------------------
# Extremal constructions
# ---------------------------------------------------------------------------

def tight_join(t, base_size, seed):
    """Maximal planar base joined with K_{t-3}: mu = t and the edge bound is tight."""
    if t < 3:
        raise ValueError(f"t must be >= 3, got {t}")
    return join(stacked_triangulation(base_size, seed), complete(t - 3))


def verify_tight_family(t_range=range(3, 9), base_sizes=range(4, 11), seeds=(0, 1, 2), config=None):
    engine = MuEngine(config or EngineConfig(enabled_rules=CHEAP_RULES))
    rows = []
    for t in t_range:
        for size in base_sizes:
            for seed in seeds:
                g = tight_join(t, size, seed)
                b = engine.bounds(g)
                expected = edge_bound(t, g.n)
                ok = g.m == expected and b.lo == t and b.hi == t
                if not ok:
                    logger.error("tight family failed: t=%d size=%d seed=%d m=%d expected %d, %s",
                                 t, size, seed, g.m, expected, b)
                rows.append({'t': t, 'base_size': size, 'seed': seed, 'n': g.n, 'm': g.m,
                             'expected_m': expected, 'lo': b.lo, 'hi': b.hi, 'ok': ok})
    return pd.DataFrame(rows)


def clique_sum_chain(base, clique, copies):
    """Pure clique sum of copies of base, each new copy glued onto the first copy's clique."""
    if copies < 1:
        raise ValueError("copies must be >= 1")
    g = base
    for _ in range(copies - 1):
        g = pure_clique_sum(CliqueSumSpec(g, base, tuple(clique), tuple(clique)))
    return g


EXTREMAL_BASES = {
    # part i of K_{2,2,2,2,2} is {2i, 2i+1}
    'k22222': (lambda: complete_multipartite([2, 2, 2, 2, 2]), (0, 2, 4, 6, 8), 6, 20),
    # part 0 of K_{1,2,2,2,2,2} is {0}, part i is {2i-1, 2i}
    'k122222': (lambda: complete_multipartite([1, 2, 2, 2, 2, 2]), (0, 1, 3, 5, 7, 9), 7, 27),
}
# same 7n - 27 count as the K_{1,2,2,2,2,2} sums, one above edge_bound(7, n)
K22233_EDGES = (7, 27)


def clique_sum_family(name, copies):
    build, clique, _, _ = EXTREMAL_BASES[name]
    return clique_sum_chain(build(), clique, copies)


def verify_extremal_families(config=None):
    engine = MuEngine(config or EngineConfig(enabled_rules=CHEAP_RULES, deletion_depth=0))
    rows = []
    for name, copies_list in (('k22222', (1, 2, 3)), ('k122222', (1, 2))):
        _, _, slope, offset = EXTREMAL_BASES[name]
        for copies in copies_list:
            g = clique_sum_family(name, copies)
            rows.append({'family': name, 'copies': copies, 'n': g.n, 'm': g.m,
                         'expected_m': slope * g.n - offset, 'ok': g.m == slope * g.n - offset})
    g = complete_multipartite([2, 2, 2, 3, 3])
    slope, offset = K22233_EDGES
    rows.append({'family': 'k22233', 'copies': 1, 'n': g.n, 'm': g.m, 'expected_m': slope * g.n - offset,
                 'ok': g.m == slope * g.n - offset})
    frame = pd.DataFrame(rows)

    lower = {'k22222': 7, 'k122222': 8, 'k22233': 8}
    base_graphs = {'k22222': EXTREMAL_BASES['k22222'][0](), 'k122222': EXTREMAL_BASES['k122222'][0](),
                   'k22233': g}
    frame['lo'] = [engine.bounds(base_graphs[f]).lo if c == 1 else np.nan
                   for f, c in zip(frame['family'], frame['copies'])]
    frame['lo_ok'] = [(c != 1) or (lo >= lower[f]) for f, c, lo in zip(frame['family'], frame['copies'], frame['lo'])]
    return frame


def hadwiger_analog_counterexample(budget=MINOR_BUDGET):
    """K_{2,2,2,2,2} has no K_8 minor yet more edges than the Hadwiger analog allows."""
    g = complete_multipartite([2, 2, 2, 2, 2])
    bracket = hadwiger_number(g, budget)
    t = bracket.upper - 1
    limit = edge_bound(t, g.n)
    return {'h_lower': bracket.lower, 'h_upper': bracket.upper, 'm': g.m, 'limit': limit,
            'fails': bracket.exact and bracket.lower == 7 and g.m > limit}


# ---------------------------------------------------------------------------
# Identities and sweeps
# ---------------------------------------------------------------------------

def verify_complement_identity(n_max=12, samples=200, seed=0):
    """C(n-t, 2) + t*n - C(t+1, 2) = C(n, 2), and the two edge inequalities agree on sampled graphs."""
    for n in range(n_max + 1):
        for t in range(n + 1):
            if comb(n - t, 2) + edge_bound(t, n) != comb(n, 2):
                logger.error("identity fails at n=%d t=%d", n, t)
                return False
    rng = np.random.default_rng(seed)
    for index in range(samples):
        n = int(rng.integers(1, min(n_max, 9) + 1))
        g = next(iter(random_graphs(n, 1, seed=seed + index, p=float(rng.random()))))
        t = int(rng.integers(0, n + 1))
        if (g.m <= edge_bound(t, n)) != (complement(g).m >= comb(n - t, 2)):
            logger.error("inequality equivalence fails for %s at t=%d", g, t)
            return False
    return True


def _resolved(engine, stream):
    for g in stream:
        b = engine.bounds(g)
        if b.resolved:
            yield g, b.value


def edge_count_sweep(n_max=7, engine=None):
    """Connected graphs with resolved mu have |E| >= C(mu+1, 2), K_{3,3} being the only exception."""
    engine = engine or MuEngine()
    k33_form = canonical_form(k33())
    rows = []
    for g, mu in _resolved(engine, enumerate_up_to(n_max)):
        if not is_connected(g):
            continue
        required = comb(mu + 1, 2)
        is_k33 = g.n == 6 and canonical_form(g) == k33_form
        ok = g.m >= required if not is_k33 else g.m == required - 1
        rows.append({'canon': canonical_form(g), 'n': g.n, 'm': g.m, 'mu': mu, 'required': required,
                     'is_k33': is_k33, 'ok': ok})
    return pd.DataFrame(rows)


def sparse_complement_sweep(n_max=7, engine=None):
    """Graphs whose complement is a forest without P_{3,2} have mu >= n - 3."""
    engine = engine or MuEngine()
    spider = p32()
    rows = []
    for g in enumerate_up_to(n_max):
        gc = complement(g)
        if has_cycle(gc) or contains_subgraph(gc, spider):
            continue
        b = engine.bounds(g)
        rows.append({'canon': canonical_form(g), 'n': g.n, 'lo': b.lo, 'hi': b.hi,
                     'resolved': b.resolved, 'ok': b.resolved and b.lo >= g.n - 3})
    return pd.DataFrame(rows)


def chordal_cross_check(n_max=7, engine=None):
    """chordal_mu against the ladder-resolved value, and mu(G) + mu(complement) >= n - 2."""
    engine = engine or MuEngine()
    ladder_only = MuEngine(EngineConfig(enabled_rules=('R1', 'R2', 'R3', 'R4'), deletion_depth=0))
    rows = []
    for g in enumerate_up_to(n_max):
        if not is_chordal(g):
            continue
        value = chordal_mu(g)
        ladder = ladder_only.bounds(g)
        complement_bounds = engine.bounds(complement(g))
        matches = not ladder.resolved or ladder.value == value
        sum_ok = not complement_bounds.resolved or value + complement_bounds.value >= g.n - 2
        rows.append({'canon': canonical_form(g), 'n': g.n, 'chordal_mu': value,
                     'ladder_lo': ladder.lo, 'ladder_hi': ladder.hi,
                     'complement_lo': complement_bounds.lo, 'complement_hi': complement_bounds.hi,
                     'ok': matches and sum_ok})
    return pd.DataFrame(rows)


def verify_complement_sum(stream, engine=None):
    """mu(G) + mu(complement) >= n - 2 and |E| <= (mu+1)n - C(mu+2, 2) wherever both values resolve."""
    engine = engine or MuEngine()
    rows = []
    for g in stream:
        b, bc = engine.bounds(g), engine.bounds(complement(g))
        if not (b.resolved and bc.resolved):
            continue
        rows.append({'canon': graph_label(g), 'n': g.n, 'm': g.m, 'mu': b.value, 'mu_complement': bc.value,
                     'sum_ok': b.value + bc.value >= g.n - 2,
                     'edges_ok': g.m <= edge_bound(b.value + 1, g.n)})
    frame = pd.DataFrame(rows, columns=['canon', 'n', 'm', 'mu', 'mu_complement', 'sum_ok', 'edges_ok'])
    frame['ok'] = frame['sum_ok'] & frame['edges_ok']
    return frame


def verify_hadwiger_edge_bound(n_max=7, budget=MINOR_BUDGET):
    """Graphs without a K_{t+2} minor (t <= 5, n >= t) have |E| <= t*n - C(t+1, 2)."""
    rows = []
    for g in enumerate_up_to(n_max):
        bracket = hadwiger_number(g, budget)
        if not bracket.exact:
            continue
        h = bracket.value
        for t in range(max(h - 1, 0), 6):
            if g.n >= t:
                rows.append({'canon': canonical_form(g), 'n': g.n, 'm': g.m, 'h': h, 't': t,
                             'ok': g.m <= edge_bound(t, g.n)})
    return pd.DataFrame(rows)


def run_check_suite(n_max=6):
    """The fixed verification suite; (name, passed, detail) per check."""
    results = []

    def record(name, frame_or_flag, detail=''):
        if isinstance(frame_or_flag, pd.DataFrame):
            passed = bool(frame_or_flag['ok'].all()) if len(frame_or_flag) else True
            detail = detail or f"{len(frame_or_flag)} rows"
        else:
            passed = bool(frame_or_flag)
        results.append((name, passed, detail))

    record('tight join family', verify_tight_family(range(3, 7), range(4, 9), (0, 1)))
    extremal = verify_extremal_families()
    record('extremal families', bool(extremal['ok'].all() and extremal['lo_ok'].all()),
           f"{len(extremal)} constructions")
    record('complement edge identity', verify_complement_identity())
    record('edge count sweep', edge_count_sweep(n_max))
    record('sparse complement sweep', sparse_complement_sweep(n_max))
    record('chordal cross-check', chordal_cross_check(n_max))
    record('complement sum', verify_complement_sum(enumerate_up_to(min(n_max, 6))))
    record('hadwiger edge bound', verify_hadwiger_edge_bound(min(n_max, 6)))
    return results
