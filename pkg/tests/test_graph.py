"""
Tests for Stallings graphs: folding, tracing, trimming and ranks.
"""

import itertools

import networkx as nx
import pytest

from stallings_lab.core.errors import AlphabetError, ContractViolation
from stallings_lab.core.graph import (
    StallingsGraph,
    canonical_form,
    components,
    connected_component,
    cycle_rank,
    fold_from_words,
    fold_graph,
    is_connected,
    is_core,
    is_covering_of_rose,
    is_member,
    isomorphic,
    reduced_rank,
    spanning_tree,
    to_networkx,
    trace,
    trim_to_core,
)
from stallings_lab.core.partial_injection import UNDEFINED
from stallings_lab.core.subgroup import basis, express_in_basis
from stallings_lab.core.words import Word, reduce, word
from stallings_lab.sampling.random_gen import (
    GraphBasedParams, WordBasedParams, make_rng, sample_graph_based, sample_word_based
)

from tests.helpers import accepted_words, all_reduced_words

CONJUGATE = word(1, 2, -1)
A, B, C, D, X, Y = range(1, 7)


@pytest.fixture
def conjugate_graph():
    return fold_from_words(2, [CONJUGATE])


def random_graphs(count, seed=7):
    rng = make_rng(seed)
    graphs = []
    for i in range(count):
        rank = 2 + i % 2
        if i % 2:
            graphs.append(sample_graph_based(GraphBasedParams(rank, 1 + i % 5), rng).graph)
        else:
            graphs.append(sample_word_based(WordBasedParams(rank, 3, 5), rng).graph)
    return graphs


def test_fold_basis_gives_rose():
    g = fold_from_words(2, [word(1), word(2)])
    assert g.vertex_count == 1
    assert all(m.is_total() for m in g.maps)
    assert cycle_rank(g) == 2


def test_fold_conjugate(conjugate_graph):
    g = conjugate_graph
    assert g.vertex_count == 2
    assert list(g.map_for(1).pairs()) == [(0, 1)]
    assert list(g.map_for(2).pairs()) == [(1, 1)]
    assert cycle_rank(g) == 1
    assert g.folded and g.core


def test_fold_guzman_h():
    g = fold_from_words(6, [word(A), word(B), word(X), word(Y, Y), word(Y, X, -Y)])
    assert g.vertex_count == 2
    assert cycle_rank(g) == 5


def test_fold_empty_list_is_trivial():
    g = fold_from_words(3, [])
    assert g.vertex_count == 1
    assert g.edge_count == 0
    assert cycle_rank(g) == 0
    assert reduced_rank(g) == 0


def test_fold_reduces_input_and_checks_alphabet():
    assert isomorphic(fold_from_words(2, [[1, 2, -2]]), fold_from_words(2, [word(1)]))
    with pytest.raises(AlphabetError):
        fold_from_words(2, [word(3)])


def test_trace(conjugate_graph):
    rose = StallingsGraph.rose(2)
    assert trace(rose, 0, word(1, -2, 1)) == 0
    assert trace(conjugate_graph, 0, word(2)) is None
    assert trace(conjugate_graph, 0, CONJUGATE) == 0


def test_membership(conjugate_graph):
    assert is_member(conjugate_graph, word(1, 2, 2, -1))
    assert is_member(conjugate_graph, Word())
    assert not is_member(conjugate_graph, word(2))
    # unreduced input is reduced before tracing
    assert is_member(conjugate_graph, [1, 2, 1, -1, -1])


def test_letters_outside_the_alphabet_are_not_members(conjugate_graph):
    F2 = fold_from_words(2, [word(1), word(2)])
    assert trace(F2, 0, word(3)) is None
    assert not is_member(F2, word(3))
    assert not is_member(conjugate_graph, word(1, -4, 1))


def test_membership_matches_loop_enumeration():
    for g in random_graphs(12):
        loops = accepted_words(g, 5)
        for w in all_reduced_words(g.rank, 5):
            assert is_member(g, w) == (w in loops)


def products(generators, max_factors):
    """Reduced products of 1..max_factors generator/inverse factors."""
    factors = list(generators) + [g.inverse() for g in generators]
    for count in range(1, max_factors + 1):
        for chosen in itertools.product(factors, repeat=count):
            yield reduce(c for f in chosen for c in f.codes)


def test_products_of_generators_are_members():
    rng = make_rng(3)
    for _ in range(10):
        H = sample_word_based(WordBasedParams(2, 3, 5), rng)
        for w in products(H.generators, 4):
            assert is_member(H.graph, w)


def test_membership_matches_product_enumeration():
    """Loops of length <= 8 that need at most 4 basis factors are exactly the short products."""
    rng = make_rng(21)
    checked = 0
    while checked < 15:
        rank = 2 + checked % 2
        H = sample_word_based(WordBasedParams(rank, 2, 4), rng)
        if H.graph.vertex_count > 6 or H.rank > 2:
            continue
        reachable = {w for w in products(basis(H), 4) if len(w) <= 8}
        reachable.add(Word())
        members = {w for w in accepted_words(H.graph, 8) if len(express_in_basis(H, w)) <= 4}
        assert reachable == members
        assert all(is_member(H.graph, w) for w in reachable)
        checked += 1


def test_connected_component_of_disjoint_roses():
    g = StallingsGraph.from_edges(2, 2, [(0, 1, 0), (0, 2, 0), (1, 1, 1), (1, 2, 1)])
    assert not is_connected(g)
    assert not g.core
    assert components(g) == [[0], [1]]
    c = connected_component(g, 1)
    assert c.vertex_count == 1
    assert c.basepoint == 0
    assert isomorphic(c, StallingsGraph.rose(2))
    with pytest.raises(ContractViolation):
        cycle_rank(g)


def test_trim_path_to_basepoint():
    path = StallingsGraph.from_edges(1, 3, [(0, 1, 1), (1, 1, 2)])
    trimmed = trim_to_core(path)
    assert trimmed.vertex_count == 1
    assert trimmed.edge_count == 0
    assert trimmed.core


def test_trim_keeps_rose():
    rose = StallingsGraph.rose(3)
    assert isomorphic(trim_to_core(rose), rose)


def test_fold_graph_of_unfolded_wedge(conjugate_graph):
    # loop spelling x1 x2 x1^-1 through vertices 0 -> 1 -> 2 -> 0
    edges = [(0, 1, 1), (1, 2, 2), (0, 1, 2)]
    assert isomorphic(fold_graph(2, 3, edges), conjugate_graph)


def test_fold_graph_identifications():
    # two disjoint loops glued at their basepoints
    g = fold_graph(2, 2, [(0, 1, 0), (1, 2, 1)], basepoint=0, identify=[(0, 1)])
    assert isomorphic(g, StallingsGraph.rose(2))


def test_loop_vertex_is_never_trimmed():
    g = StallingsGraph.from_edges(2, 2, [(0, 1, 1), (1, 2, 1)])
    assert g.degree(1) == 3
    assert trim_to_core(g).vertex_count == 2


def test_covering_of_rose(conjugate_graph):
    assert is_covering_of_rose(StallingsGraph.rose(2))
    assert not is_covering_of_rose(conjugate_graph)
    g = fold_from_words(2, [word(2), word(1, 1), CONJUGATE])
    assert g.vertex_count == 2
    assert is_covering_of_rose(g)


def test_folding_confluence():
    rng = make_rng(11)
    for _ in range(15):
        H = sample_word_based(WordBasedParams(3, 3, 6), rng)
        gens = list(H.generators)
        expected = fold_from_words(3, gens)
        assert isomorphic(fold_from_words(3, list(reversed(gens))), expected)
        assert isomorphic(fold_from_words(3, [g.inverse() for g in gens]), expected)
        assert isomorphic(fold_from_words(3, gens + gens[:1]), expected)


def test_canonical_form_ignores_numbering(conjugate_graph):
    relabelled = StallingsGraph.from_edges(2, 2, [(1, 1, 0), (0, 2, 0)], basepoint=1)
    assert canonical_form(relabelled) == canonical_form(conjugate_graph)
    assert not isomorphic(conjugate_graph, StallingsGraph.rose(2))


def test_euler_characteristic_matches_spanning_tree():
    for g in random_graphs(20):
        tree = spanning_tree(g)
        assert cycle_rank(g) == len(tree.non_tree_edges)
        assert len(tree.paths) == g.vertex_count
        for v, path in tree.paths.items():
            assert trace(g, g.basepoint, path) == v


def test_networkx_oracle_agrees():
    for g in random_graphs(20):
        exported = to_networkx(g)
        assert exported.number_of_edges() == g.edge_count
        undirected = nx.MultiGraph(exported)
        assert nx.is_connected(undirected) == is_connected(g)
        forest = nx.minimum_spanning_tree(nx.Graph(undirected))
        assert g.edge_count - forest.number_of_edges() == cycle_rank(g)


def test_maps_stay_mutually_inverse():
    for g in random_graphs(20):
        for m in g.maps:
            for v, w in enumerate(m.forward):
                if w != UNDEFINED:
                    assert m.backward[w] == v
            for w, v in enumerate(m.backward):
                if v != UNDEFINED:
                    assert m.forward[v] == w


def test_trim_and_component_preserve_membership():
    edges = [(0, 1, 1), (1, 2, 1), (1, 1, 2), (2, 2, 3), (3, 1, 4)]
    g = fold_graph(2, 5, edges)
    raw = StallingsGraph.from_edges(2, 5, edges)
    for w in all_reduced_words(2, 6):
        assert is_member(g, w) == is_member(raw, w)
    assert is_core(g)


def test_fold_benchmark(benchmark):
    rng = make_rng(5)
    gens = list(sample_word_based(WordBasedParams(3, 8, 40), rng).generators)
    g = benchmark(fold_from_words, 3, gens)
    assert g.core
