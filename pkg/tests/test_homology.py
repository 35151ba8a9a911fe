from collections import Counter, defaultdict

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import GF, Matrix
from sympy.polys.matrices import DomainMatrix

from conftest import CATALOG_4, CATALOG_5
from oracles import hilbert_numerator
from test_monomial_ideal import ideals

from cutideal.cut_monomials import VarContext, cut_ideal
from cutideal.errors import CutIdealError, GuardExceeded
from cutideal.graph_core import Graph, cycle_graph, is_tree, path_graph
from cutideal.homology import (
    BettiTable,
    LinearQuotientsCertificate,
    _rank_gf2,
    _rank_mod_p,
    betti_from_linear_quotients,
    graded_betti,
    has_linear_first_syzygies,
    has_linear_resolution,
    invariants_from_betti,
    is_pure,
    linear_quotients_certificate,
    reg_via_dual,
    restricted_homology_ranks,
    tree_betti_formula,
)
from cutideal.monomial_ideal import minimal_primes, minimalize, sr_faces


def k_polynomial(table, nvars):
    coeffs = [0] * (nvars + 1)
    for (i, j), v in table.items():
        coeffs[j] += (-1) ** i * v
    return coeffs


def test_restricted_homology_examples():
    single = cut_ideal(path_graph(1))
    # the restriction to no variables is the complex {empty face}: H~_{-1} = k
    assert restricted_homology_ranks(single, 0) == [1]
    # both variables are non-faces of (s12, t12)
    assert restricted_homology_ranks(single, 0b11) == [1]
    # (s12 t12): two isolated points
    dual = minimalize([0b11], single.context)
    assert restricted_homology_ranks(dual, 0b11) == [0, 1]
    c3 = cut_ideal(cycle_graph(3))
    # three variables with no generator inside: full simplex
    assert not any(restricted_homology_ranks(c3, 0b000111))
    with pytest.raises(CutIdealError):
        restricted_homology_ranks(single, 0b11, p=4)
    with pytest.raises(CutIdealError):
        restricted_homology_ranks(single, 0b100)


def test_sphere_homology():
    # one generator of degree 4: restriction is the boundary of a 3-simplex
    ideal = minimalize([0b1111], VarContext.of(path_graph(2)))
    for p in (2, 3, 5):
        assert restricted_homology_ranks(ideal, 0b1111, p) == [0, 0, 0, 1]


@given(st.lists(st.lists(st.integers(0, 4), min_size=6, max_size=6), min_size=1, max_size=6),
       st.sampled_from([2, 3, 5]))
def test_rank_matches_sympy(rows, p):
    expected = DomainMatrix.from_Matrix(Matrix(rows)).convert_to(GF(p)).rank()
    cols = [{r: rows[r][c] for r in range(len(rows)) if rows[r][c]} for c in range(6)]
    assert _rank_mod_p(cols, p) == expected
    if p == 2:
        bits = [sum((rows[r][c] % 2) << r for r in range(len(rows))) for c in range(6)]
        assert _rank_gf2(bits) == expected


def test_betti_examples():
    assert graded_betti(cut_ideal(path_graph(1))).entries == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
    assert graded_betti(cut_ideal(path_graph(2))).entries == {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}
    c3 = graded_betti(cut_ideal(cycle_graph(3)))
    assert c3[1, 3] == 4
    assert all(j - i == 3 for (i, j) in c3.entries if i >= 2)


def test_betti_guards():
    k5 = Graph.from_edges(5, [(a, b) for a in range(1, 6) for b in range(a + 1, 6)])
    with pytest.raises(GuardExceeded):
        graded_betti(cut_ideal(k5))
    with pytest.raises(CutIdealError):
        graded_betti(cut_ideal(path_graph(2)), p=6)


@given(ideals(), st.sampled_from([2, 3]))
def test_alternating_sums_match_faces(ideal, p):
    table = graded_betti(ideal, p)
    assert k_polynomial(table, ideal.nvars) == hilbert_numerator(sr_faces(ideal), ideal.nvars)


@given(st.sampled_from(CATALOG_4))
def test_cut_ideal_alternating_sums(g):
    ideal = cut_ideal(g)
    assert k_polynomial(graded_betti(ideal), ideal.nvars) == hilbert_numerator(sr_faces(ideal), ideal.nvars)


@given(st.sampled_from([g for g in CATALOG_5 if 1 <= g.m <= 5]))
def test_hochster_first_column_counts_generators(g):
    ideal = cut_ideal(g)
    table = graded_betti(ideal)
    assert {j: v for (i, j), v in table.items() if i == 1} == dict(Counter(ideal.degrees()))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_tree_invariants(r):
    ideal = cut_ideal(path_graph(r))
    inv = invariants_from_betti(graded_betti(ideal), ideal.nvars)
    assert (inv.reg, inv.depth, inv.projdim) == (r - 1, r - 1, r + 1)


@pytest.mark.parametrize("r", [3, 4])
def test_cycle_invariants(r):
    ideal = cut_ideal(cycle_graph(r))
    table = graded_betti(ideal)
    inv = invariants_from_betti(table, ideal.nvars)
    assert (inv.reg, inv.depth) == (r, r)
    assert is_pure(table) and not has_linear_resolution(table, r)
    assert not has_linear_first_syzygies(table, r)


def test_resolution_shape_flags():
    t3 = graded_betti(cut_ideal(path_graph(3)))
    assert has_linear_resolution(t3, 3) and is_pure(t3) and has_linear_first_syzygies(t3, 3)
    mixed = BettiTable(2, {(0, 0): 1, (1, 2): 1, (1, 3): 1})
    assert not is_pure(mixed)


def test_linear_quotients_t2():
    ideal = cut_ideal(path_graph(2))
    cert = linear_quotients_certificate(ideal)
    assert cert.set_sizes == (0, 1, 1, 2)
    assert cert.check()
    assert betti_from_linear_quotients(cert) == [4, 4, 1]


@pytest.mark.parametrize("r", range(1, 7))
def test_linear_quotients_paths(r):
    ideal = cut_ideal(path_graph(r))
    ctx = ideal.context
    cert = linear_quotients_certificate(ideal)
    assert cert is not None and cert.check()
    for u, w in zip(cert.order, cert.witness_sets):
        assert w == sum(ctx.s(k) for k in range(r) if u & ctx.t(k))
    assert cert.set_sizes == tuple(bin(u & ctx.t_mask).count("1") for u in cert.order)
    assert betti_from_linear_quotients(cert) == [tree_betti_formula(r, i) for i in range(r + 1)]


def test_linear_quotients_fail_for_triangle():
    assert linear_quotients_certificate(cut_ideal(cycle_graph(3))) is None


def test_linear_quotients_rejects_mixed_degrees():
    with pytest.raises(CutIdealError):
        linear_quotients_certificate(minimalize([0b1, 0b110], VarContext.of(path_graph(2))))


def test_degenerate_certificate():
    ctx = VarContext.of(path_graph(1))
    assert betti_from_linear_quotients(LinearQuotientsCertificate(ctx, (1,), (0,))) == [1]


def test_tree_formula():
    assert tree_betti_formula(2, 1) == 4
    assert tree_betti_formula(3, 0) == 8
    assert all(tree_betti_formula(r, r) == 1 for r in range(1, 8))
    with pytest.raises(CutIdealError):
        tree_betti_formula(2, 3)


def test_reg_via_dual_examples():
    assert reg_via_dual(cut_ideal(cycle_graph(3))) == 3
    assert reg_via_dual(cut_ideal(path_graph(2))) == 1
    assert reg_via_dual(cut_ideal(path_graph(1))) == 0


def test_trees_with_same_edge_count_look_alike():
    by_edges = defaultdict(set)
    for g in CATALOG_5:
        if g.m and is_tree(g) and g.m <= 4:
            ideal = cut_ideal(g)
            heights = tuple(sorted(bin(p).count("1") for p in minimal_primes(ideal)))
            by_edges[g.m].add((tuple(graded_betti(ideal).items()), heights))
    assert sorted(by_edges) == [1, 2, 3, 4]
    assert all(len(v) == 1 for v in by_edges.values())


def test_betti_json_csv_diagram():
    table = graded_betti(cut_ideal(path_graph(1)))
    data = table.to_json()
    assert data == {"char": 2, "entries": [{"i": 0, "j": 0, "value": 1},
                                           {"i": 1, "j": 1, "value": 2},
                                           {"i": 2, "j": 2, "value": 1}]}
    assert BettiTable.from_json(data) == table
    assert table.to_csv().splitlines() == ["i,j,value", "0,0,1", "1,1,2", "2,2,1"]
    assert "total:" in table.diagram()
