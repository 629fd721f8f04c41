#!/usr/bin/env python3
"""
Minor search, Hadwiger brackets and the Petersen family
"""

import sys

import pytest

from graph_core import (
    CapacityError, add_edge, complete, complete_multipartite, cycle, edgeless, path, petersen, k33,
    stacked_triangulation, wheel,
)
from corpus import canonical_form, enumerate_up_to, random_graphs
from recognizers import clique_number, is_planar
from minors import (
    MinorQuery, has_minor, run_query, hadwiger_number, HadwigerBracket, petersen_family,
    is_petersen_family_free,
)


def test_has_minor_examples():
    assert has_minor(petersen(), complete(5))
    assert has_minor(petersen(), k33())
    assert not has_minor(complete(4), complete(5))
    assert has_minor(cycle(6), complete(3))
    assert not has_minor(path(6), complete(3))
    assert has_minor(wheel(6), complete(4))
    assert not has_minor(stacked_triangulation(9, 1), complete(5))
    assert has_minor(edgeless(3), edgeless(2))


def test_host_limit():
    with pytest.raises(CapacityError):
        has_minor(cycle(17), complete(3))


def test_budget_exhaustion():
    assert has_minor(complete_multipartite([2, 2, 2, 2, 2]), complete(8), budget=1) is None
    bracket = hadwiger_number(complete_multipartite([2, 2, 2, 2, 2]), budget=1)
    assert not bracket.exact and bracket.value is None


def test_run_query():
    assert run_query(MinorQuery(petersen(), complete(5))) is True
    assert run_query(MinorQuery(cycle(5), complete(4))) is False


def test_planar_graphs_have_no_k5_minor():
    k5, k33_pattern = complete(5), k33()
    for g in enumerate_up_to(6):
        if is_planar(g):
            assert not has_minor(g, k5)
            assert not has_minor(g, k33_pattern)


def test_minor_monotone_under_edge_addition():
    k4 = complete(4)
    for g in random_graphs(7, 25, seed=6, p=0.35):
        if has_minor(g, k4) and g.non_edges():
            u, v = g.non_edges()[0]
            assert has_minor(add_edge(g, u, v), k4)


def test_hadwiger_number():
    assert hadwiger_number(complete(6)) == HadwigerBracket(6, 6)
    assert hadwiger_number(cycle(5)).value == 3
    assert hadwiger_number(petersen()) == HadwigerBracket(5, 5)
    assert hadwiger_number(complete_multipartite([2, 2, 2, 2, 2])).value == 7
    for g in random_graphs(7, 20, seed=8):
        assert hadwiger_number(g).value >= clique_number(g)


def test_petersen_family():
    family = petersen_family()
    assert len(family) == 7
    assert all(member.m == 15 for member in family)
    assert len({canonical_form(member) for member in family}) == 7
    assert sorted(member.n for member in family) == [6, 7, 7, 8, 8, 9, 10]


def test_petersen_family_free():
    assert is_petersen_family_free(k33())
    assert is_petersen_family_free(stacked_triangulation(10, 0))
    assert not is_petersen_family_free(complete(6))
    assert not is_petersen_family_free(petersen())
    assert not is_petersen_family_free(complete(7))
    for member in petersen_family():
        assert is_petersen_family_free(member) is False


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
