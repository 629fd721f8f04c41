#!/usr/bin/env python3
"""
Tests for the bitset graph type, its operations and constructors
"""

import sys

import networkx as nx
import pytest

from graph_core import (
    Graph, CapacityError, PreconditionError, CliqueSumSpec, pure_clique_sum, complement, join,
    disjoint_union, contract_edge, induced_subgraph, delete_vertex, delete_edge, components,
    is_connected, is_isomorphic, edgeless, complete, path, cycle, star, complete_multipartite, p32,
    k_minus_triangle, stacked_triangulation, petersen, k33, k44_minus_edge, wheel, named_graph, graph_name,
)


def test_validation():
    with pytest.raises(PreconditionError):
        Graph(2, (0b01, 0b00))  # loop at 0
    with pytest.raises(PreconditionError):
        Graph(2, (0b10, 0b00))  # not symmetric
    with pytest.raises(CapacityError):
        Graph(65, (0,) * 65)
    with pytest.raises(PreconditionError):
        Graph.from_edges(3, [(0, 3)])
    assert Graph(0, ()).m == 0


def test_basic_queries():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert g.m == 4
    assert g.degrees() == [2, 2, 3, 1]
    assert g.min_degree() == 1 and g.max_degree() == 3
    assert g.edges() == [(0, 1), (0, 2), (1, 2), (2, 3)]
    assert g.non_edges() == [(0, 3), (1, 3)]
    assert g.universal_vertices() == [2]
    assert g.is_clique([0, 1, 2]) and not g.is_clique([0, 1, 3])


def test_complement_and_join():
    assert complement(complete(5)).is_edgeless()
    assert is_isomorphic(complement(cycle(5)), cycle(5))
    k6 = join(complete(4), complete(2))
    assert k6.is_complete() and k6.n == 6
    assert join(edgeless(3), edgeless(3)) == complete_multipartite([3, 3])


def test_contract_edge():
    triangle = contract_edge(cycle(4), 0, 1)
    assert triangle.n == 3 and triangle.m == 3
    # merged vertex keeps the smaller label, later vertices shift down
    assert contract_edge(path(4), 1, 2).edges() == [(0, 1), (1, 2)]
    with pytest.raises(PreconditionError):
        contract_edge(path(4), 0, 2)


def test_induced_and_delete():
    outer = induced_subgraph(petersen(), range(5))
    assert is_isomorphic(outer, cycle(5))
    assert delete_vertex(complete(1), 0).n == 0
    assert delete_vertex(star(3), 0).is_edgeless()
    assert delete_edge(complete(3), 0, 1).m == 2
    with pytest.raises(PreconditionError):
        induced_subgraph(cycle(4), [])


def test_components():
    g = disjoint_union(complete(3), path(2))
    assert components(g) == [[0, 1, 2], [3, 4]]
    assert not is_connected(g)
    assert is_connected(petersen())


def test_pure_clique_sum():
    g = pure_clique_sum(CliqueSumSpec(complete(4), complete(4), (0, 1), (2, 3)))
    assert g.n == 6 and g.m == 11
    with pytest.raises(PreconditionError):
        pure_clique_sum(CliqueSumSpec(path(3), complete(3), (0, 2), (0, 1)))
    with pytest.raises(PreconditionError):
        pure_clique_sum(CliqueSumSpec(complete(3), complete(3), (0, 1), (0,)))


def test_constructors():
    assert p32().m == 6 and p32().degrees()[0] == 3
    kmt = k_minus_triangle(5)
    assert kmt.m == 7 and kmt.universal_vertices() == [0, 1]
    assert is_isomorphic(kmt, complete_multipartite([1, 1, 3]))
    assert petersen().m == 15 and set(petersen().degrees()) == {3}
    assert k33().m == 9
    assert k44_minus_edge().m == 15
    assert wheel(6).m == 10
    assert complete_multipartite([2, 2, 2, 2, 2]).m == 40
    assert complete_multipartite([2, 2, 2, 3, 3]).m == 57


def test_stacked_triangulation():
    for seed in range(5):
        g = stacked_triangulation(10, seed)
        assert g.m == 24
        assert nx.check_planarity(g.to_networkx())[0]
    assert stacked_triangulation(7, 3) == stacked_triangulation(7, 3)
    with pytest.raises(PreconditionError):
        stacked_triangulation(3)


def test_named_graphs():
    assert named_graph('K5').m == 10
    assert named_graph('c7') == cycle(7)
    assert named_graph('petersen') == petersen()
    assert named_graph('S3') == star(3)
    with pytest.raises(PreconditionError):
        named_graph('dodecahedron')


def test_graph_name():
    assert graph_name(complete(3)) == 'K_3'
    assert graph_name(cycle(5)) == 'C_5' and graph_name(path(4)) == 'P_4'
    assert graph_name(petersen()) == 'petersen'
    assert graph_name(complete_multipartite([3, 3, 2, 2, 2])) == 'k22233'
    assert graph_name(star(3)) is None


def test_networkx_view():
    g = petersen().to_networkx()
    assert g.number_of_nodes() == 10 and g.number_of_edges() == 15
    assert nx.is_isomorphic(g, nx.petersen_graph())


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
