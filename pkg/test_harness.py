#!/usr/bin/env python3
"""
Campaign verdicts, reports and the extremal-family checks
"""

import json
import sys

import pytest

from graph_core import complete, cycle, delete_edge, petersen, path
from corpus import GraphStream, enumerate_graphs, enumerate_up_to, random_graphs
from engine import MuBounds, EngineConfig
from report import read_report, summarize_frame, ReportOutput
import harness
from harness import (
    HOLDS, VIOLATES, INCONCLUSIVE, Verdict, CampaignViolationError, edge_bound, check_conjecture,
    minimal_counterexample_filter, run_campaign, tight_join, verify_tight_family, clique_sum_family,
    verify_extremal_families, hadwiger_analog_counterexample, verify_complement_identity, edge_count_sweep,
    sparse_complement_sweep, chordal_cross_check, verify_complement_sum, verify_hadwiger_edge_bound,
    run_check_suite,
)


def test_edge_bound():
    assert edge_bound(5, 6) == 15
    assert edge_bound(5, 10) == 35
    assert edge_bound(3, 6) == 12


def test_check_conjecture_outcomes():
    verdict = check_conjecture(complete(6), MuBounds(5, 5))
    assert verdict.outcome == HOLDS and verdict.m == verdict.detail['limit_at_lo'] == 15

    assert check_conjecture(petersen(), MuBounds(5, 5)).outcome == HOLDS

    # n=10: limits 42 at mu=7 and 44 at mu=8
    g = delete_edge(delete_edge(complete(10), 0, 1), 2, 3)
    assert g.m == 43
    assert check_conjecture(g, MuBounds(7, 8)).outcome == INCONCLUSIVE

    assert check_conjecture(complete(3), MuBounds(1, 1)).outcome == VIOLATES


def test_class_tags_and_record():
    verdict = check_conjecture(complete(4), MuBounds(3, 3))
    assert 'chordal' in verdict.tags and 'coChordal' in verdict.tags and 'muAtMost7' in verdict.tags
    record = verdict.to_record()
    assert set(record) == {'canon', 'n', 'm', 'lo', 'hi', 'outcome', 'tags', 'rulesFired', 'elapsedMicros'}
    assert 'chordal' not in check_conjecture(cycle(5), MuBounds(2, 2)).tags


def test_minimal_counterexample_filter():
    assert not minimal_counterexample_filter(complete(4), MuBounds(3, 3), True)
    assert not minimal_counterexample_filter(path(4), MuBounds(1, 1), True)
    assert minimal_counterexample_filter(cycle(5), MuBounds(1, 2), True)
    assert minimal_counterexample_filter(complete(4), MuBounds(3, 3), False)


def test_campaign_on_small_graphs(tmp_path):
    out = tmp_path / "n5.jsonl"
    report = run_campaign(enumerate_graphs(5), jsonl_path=out, progress=False)
    assert report.summary['graphs'] == 34
    assert report.summary['outcomes'] == {HOLDS: 34, VIOLATES: 0, INCONCLUSIVE: 0}
    lines = out.read_text().splitlines()
    assert len(lines) == 34
    assert json.loads(lines[0])['n'] == 5
    frame = read_report(out)
    assert len(frame) == 34
    assert summarize_frame(frame)['outcomes'] == report.summary['outcomes']
    assert ReportOutput('text').generate_report(report.summary).startswith("34 graphs, 34 Holds")


def test_campaign_with_degree_filter():
    report = run_campaign(enumerate_up_to(5), use_degree_filter=True, progress=False)
    assert report.summary['outcomes'][HOLDS] == 1 + 2 + 4 + 11 + 34


def test_empty_campaign(tmp_path):
    out = tmp_path / "empty.jsonl"
    report = run_campaign(GraphStream('empty', lambda: iter([]), 0), jsonl_path=out, progress=False)
    assert report.records == [] and report.summary['graphs'] == 0
    assert len(read_report(out)) == 0


def test_violation_stops_campaign(tmp_path, monkeypatch):
    def always_violates(g, bounds):
        return Verdict('x', g.n, g.m, bounds, VIOLATES)
    monkeypatch.setattr(harness, 'check_conjecture', always_violates)
    out = tmp_path / "violation.jsonl"
    with pytest.raises(CampaignViolationError):
        run_campaign(enumerate_graphs(3), jsonl_path=out, workers=1, progress=False)
    assert len(out.read_text().splitlines()) == 1


def test_tight_joins():
    g = tight_join(8, 10, 1)
    assert g.n == 15 and g.m == 84 == edge_bound(8, 15)
    assert tight_join(3, 4, 0).m == 6
    assert tight_join(5, 4, 0).is_complete()
    frame = verify_tight_family(range(3, 6), range(4, 7), (0, 1))
    assert len(frame) == 18 and frame['ok'].all()


def test_clique_sum_families():
    g = clique_sum_family('k22222', 2)
    assert g.n == 15 and g.m == 70 == 6 * 15 - 20
    g = clique_sum_family('k122222', 2)
    assert g.n == 16 and g.m == 85 == 7 * 16 - 27
    frame = verify_extremal_families()
    assert frame['ok'].all() and frame['lo_ok'].all()
    row = frame[frame['family'] == 'k22233'].iloc[0]
    assert row['n'] == 12 and row['m'] == row['expected_m'] == 57 == edge_bound(7, 12) + 1


def test_hadwiger_analog_counterexample():
    result = hadwiger_analog_counterexample()
    assert result['fails']
    assert result['m'] == 40 and result['limit'] == 39


def test_complement_identity():
    assert verify_complement_identity(n_max=10, samples=100)


def test_sweeps():
    frame = edge_count_sweep(6)
    assert frame['ok'].all() and frame['is_k33'].sum() == 1
    assert sparse_complement_sweep(6)['ok'].all()
    assert chordal_cross_check(6)['ok'].all()
    assert verify_complement_sum(enumerate_up_to(5))['ok'].all()
    assert verify_hadwiger_edge_bound(5)['ok'].all()


def test_check_suite():
    results = run_check_suite(n_max=5)
    failed = [(name, detail) for name, passed, detail in results if not passed]
    assert not failed


@pytest.mark.slow
def test_full_campaign_up_to_seven():
    report = run_campaign(enumerate_up_to(7), config=EngineConfig(), progress=False)
    assert report.summary['outcomes'][VIOLATES] == 0
    assert report.summary['outcomes'][INCONCLUSIVE] == 0


@pytest.mark.slow
def test_random_campaign_on_eight_vertices():
    report = run_campaign(random_graphs(8, 100, seed=2024), progress=False)
    assert report.summary['graphs'] == 100
    assert report.summary['outcomes'][VIOLATES] == 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
