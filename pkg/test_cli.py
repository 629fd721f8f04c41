#!/usr/bin/env python3
"""
Command-line surface: output text and exit codes
"""

import sys

import pytest

import harness
from harness import Verdict, VIOLATES, INCONCLUSIVE
import main as cli
from main import main, EXIT_OK, EXIT_USAGE, EXIT_VIOLATES, EXIT_INCONCLUSIVE, EXIT_INVALID_CERT


def test_mu(capsys):
    assert main(['mu', 'C~']) == EXIT_OK
    assert capsys.readouterr().out.strip() == "mu = 3 [3,3]"
    assert main(['mu', 'petersen']) == EXIT_OK
    assert capsys.readouterr().out.strip() == "mu = 5 [5,5]"


def test_mu_explain(capsys):
    assert main(['mu', 'C6', '--explain']) == EXIT_OK
    out = capsys.readouterr().out
    assert "R4" in out and "mu = 2" in out


def test_mu_bad_graph(capsys):
    assert main(['mu', '!!']) == EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_unknown_command():
    assert main(['frobnicate']) == EXIT_USAGE


def test_verify_enumerate(capsys, tmp_path):
    out = tmp_path / "n4.jsonl"
    assert main(['verify', '--enumerate', '4', '--quiet', '--workers', '1', '--jsonl', str(out)]) == EXIT_OK
    assert capsys.readouterr().out.startswith("11 graphs, 11 Holds")
    assert len(out.read_text().splitlines()) == 11


def test_verify_enumerate_defaults_to_campaign_order(capsys, monkeypatch):
    monkeypatch.setattr(cli, "CAMPAIGN_DEFAULT_MAX_N", 3)
    assert main(['verify', '--enumerate', '--quiet', '--workers', '1']) == EXIT_OK
    assert capsys.readouterr().out.startswith("4 graphs, 4 Holds")


def test_verify_input_file(capsys, tmp_path):
    graphs = tmp_path / "graphs.g6"
    graphs.write_text("C~\nBw\n")
    assert main(['verify', '--input', str(graphs), '--quiet', '--workers', '1', '--format', 'json']) == EXIT_OK
    assert '"graphs": 2' in capsys.readouterr().out


def test_verify_saves_to_database(capsys, tmp_path):
    url = f"sqlite:///{tmp_path / 'runs.db'}"
    assert main(['verify', '--enumerate', '3', '--quiet', '--workers', '1', '--db', url]) == EXIT_OK
    assert "saved as run 1" in capsys.readouterr().out

    from db import get_session, get_campaign, list_campaigns
    session = get_session(url)
    runs = list_campaigns(session)
    assert len(runs) == 1 and runs[0].graphs == 4 and runs[0].holds == 4
    run, verdicts = get_campaign(session, runs[0].id)
    assert len(verdicts) == 4 and all(v.outcome == 'Holds' for v in verdicts)


def test_verify_exit_codes(monkeypatch):
    def violates(g, bounds):
        return Verdict('x', g.n, g.m, bounds, VIOLATES)

    def inconclusive(g, bounds):
        return Verdict('x', g.n, g.m, bounds, INCONCLUSIVE)

    monkeypatch.setattr(harness, 'check_conjecture', violates)
    assert main(['verify', '--enumerate', '3', '--quiet', '--workers', '1']) == EXIT_VIOLATES
    monkeypatch.setattr(harness, 'check_conjecture', inconclusive)
    assert main(['verify', '--enumerate', '3', '--quiet', '--workers', '1']) == EXIT_OK
    assert main(['verify', '--enumerate', '3', '--quiet', '--workers', '1', '--strict']) == EXIT_INCONCLUSIVE


def test_construct(capsys, tmp_path):
    assert main(['construct', 'named', 'petersen']) == EXIT_OK
    assert "n=10 m=15" in capsys.readouterr().out
    out = tmp_path / "tight.g6"
    assert main(['construct', 'join-tight', '--t', '8', '--base-size', '10', '--seed', '1', '--out', str(out)]) == EXIT_OK
    assert "n=15 m=84" in capsys.readouterr().out
    assert len(out.read_text().splitlines()) == 1
    assert main(['construct', 'clique-sum', '--family', 'k22222', '--copies', '2']) == EXIT_OK
    assert "n=15 m=70" in capsys.readouterr().out


def test_cert_round_trip(capsys, tmp_path):
    path = tmp_path / "k3.cert"
    assert main(['cert', 'canonical', '3', '--out', str(path)]) == EXIT_OK
    capsys.readouterr()
    assert main(['cert', 'verify', str(path)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "valid, corank 2, mu(K_3) >= 2"


def test_cert_invalid(capsys, tmp_path):
    path = tmp_path / "bad.cert"
    path.write_text("cdv 1\nBw\n2\n-1 0 -1\n0 -1 -1\n-1 -1 -1\n")
    assert main(['cert', 'verify', str(path)]) == EXIT_INVALID_CERT
    assert "PatternEdgeSign" in capsys.readouterr().out


def test_cert_search(capsys):
    assert main(['cert', 'search', 'K4', '--corank', '3']) == EXIT_OK
    assert "corank 3" in capsys.readouterr().out


def test_enumerate(capsys, tmp_path):
    out = tmp_path / "n5.g6"
    assert main(['enumerate', '--n', '5', '--out', str(out)]) == EXIT_OK
    assert "34 graphs on 5 vertices" in capsys.readouterr().out
    assert len(out.read_text().splitlines()) == 34


def test_check(capsys):
    assert main(['check', '--n-max', '4']) == EXIT_OK
    assert "FAIL" not in capsys.readouterr().out


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
