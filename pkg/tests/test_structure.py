import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CATALOG_5
from oracles import brute_minimal_primes

from cutideal.cut_monomials import VarContext, cut_ideal, s_degree
from cutideal.errors import GraphError, GuardExceeded
from cutideal.graph_core import Graph, cycle_graph, is_cycle, is_tree, path_graph
from cutideal.monomial_ideal import minimal_primes
from cutideal.structure import (
    check_cm_characterization,
    contains_ideal,
    cycle_decomposition,
    cycle_parity_ok,
    general_decomposition,
    height_classification,
    is_unmixed,
    tree_decomposition,
)

STAR = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])


def edge_prime(g, k):
    ctx = VarContext.of(g)
    return ctx.s(k) | ctx.t(k)


def test_tree_decomposition():
    assert tree_decomposition(path_graph(1)).primes == (0b11,)
    t2 = path_graph(2)
    assert tree_decomposition(t2).primes == (edge_prime(t2, 0), edge_prime(t2, 1))
    assert len(tree_decomposition(STAR)) == 3
    with pytest.raises(GraphError):
        tree_decomposition(cycle_graph(3))


@pytest.mark.parametrize("r, count", [(3, 7), (4, 12), (5, 21), (6, 38)])
def test_cycle_decomposition_counts(r, count):
    dec = cycle_decomposition(cycle_graph(r))
    assert len(dec) == count == r + 2 ** (r - 1)
    assert dec.prime_set() == frozenset(minimal_primes(cut_ideal(cycle_graph(r))))
    assert cycle_parity_ok(dec, r)


def test_cycle_decomposition_rejects_non_cycles():
    with pytest.raises(GraphError):
        cycle_decomposition(path_graph(3))


def test_cycle_primes_brute_force():
    # 6 variables: small enough for exhaustive enumeration
    g = cycle_graph(3)
    assert cycle_decomposition(g).prime_set() == brute_minimal_primes(cut_ideal(g).gens, 6)


def test_general_decomposition_examples(chorded_square):
    for tree in (path_graph(3), STAR):
        assert general_decomposition(tree).prime_set() == tree_decomposition(tree).prime_set()
    c3 = cycle_graph(3)
    assert general_decomposition(c3).prime_set() == cycle_decomposition(c3).prime_set()
    dec = general_decomposition(chorded_square)
    assert len(dec) == 21
    assert dec.prime_set() == frozenset(minimal_primes(cut_ideal(chorded_square)))
    tags = set(dec.provenance)
    assert tags == {"edge", "cycle:1,2,3", "cycle:1,3,4", "cycle:1,2,3,4"}


@given(st.sampled_from(CATALOG_5))
def test_general_decomposition_matches_oracle(g):
    if g.m == 0:
        return
    ideal = cut_ideal(g)
    dec = general_decomposition(g)
    assert dec.prime_set() == frozenset(minimal_primes(ideal))
    assert all(contains_ideal(p, ideal) for p in dec.primes)
    assert all(not (p != q and p & ~q == 0) for p in dec.primes for q in dec.primes)
    assert is_unmixed(dec) == is_tree(g)


def test_height_classification(chorded_square):
    c4 = cycle_graph(4)
    assert height_classification(cycle_decomposition(c4), c4).histogram == {2: 4, 4: 8}
    t3 = path_graph(3)
    assert height_classification(tree_decomposition(t3), t3).histogram == {2: 3}
    report = height_classification(general_decomposition(chorded_square), chorded_square)
    assert report.histogram == {2: 5, 3: 8, 4: 8}
    assert report.max_height == 4 and not report.attains_edge_count and report.bound_holds


def test_path_123_attains_edge_count():
    t2 = path_graph(2)
    assert height_classification(general_decomposition(t2), t2).attains_edge_count


def test_single_edge_exceeds_height_bound():
    g = path_graph(1)
    report = height_classification(general_decomposition(g), g)
    assert report.histogram == {2: 1} and not report.bound_holds


@given(st.sampled_from([g for g in CATALOG_5 if g.m >= 2]))
def test_height_attained_only_for_cycles_and_short_path(g):
    report = height_classification(general_decomposition(g), g)
    assert report.bound_holds
    assert report.attains_edge_count == (is_cycle(g) or (g.n == 3 and g.m == 2))


def test_unmixed_examples():
    assert is_unmixed(tree_decomposition(path_graph(4)))
    assert not is_unmixed(cycle_decomposition(cycle_graph(3)))
    assert is_unmixed(tree_decomposition(path_graph(1)))


def test_cycle_non_edge_primes_parity():
    for r in range(3, 8):
        dec = cycle_decomposition(cycle_graph(r))
        for p, tag in zip(dec.primes, dec.provenance):
            if tag != "edge":
                assert bin(p).count("1") == r
                assert s_degree(p, dec.context) % 2 == (0 if r % 2 else 1)


def test_cm_characterization_examples():
    single = check_cm_characterization(path_graph(1))
    assert single.cohen_macaulay and single.depth == single.dim == 0 and single.consistent
    t2 = check_cm_characterization(path_graph(2))
    assert (t2.depth, t2.dim, t2.cohen_macaulay) == (1, 2, False) and t2.consistent
    c3 = check_cm_characterization(cycle_graph(3))
    assert (c3.depth, c3.dim, c3.cohen_macaulay) == (3, 4, False) and c3.consistent
    with pytest.raises(GuardExceeded):
        check_cm_characterization(cycle_graph(5))


def test_fault_injection_drops_a_prime(chorded_square):
    assert len(general_decomposition(chorded_square, drop_cycle_prime=True)) == 20


def test_decomposition_json():
    items = general_decomposition(cycle_graph(3)).to_json()
    assert items[0] == {"height": 2, "vars": ["s_{1,2}", "t_{1,2}"], "provenance": "edge"}
    assert items[-1]["provenance"] == "cycle:1,2,3" and items[-1]["height"] == 3
