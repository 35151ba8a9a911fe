"""Catalog-wide verification of the structural statements.

Each graph is checked independently (optionally in worker processes) and
the outcomes are folded into one line per statement, in a fixed order.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .cut_monomials import VarContext, cut_ideal, restrict_monomial
from .errors import GraphError, GuardExceeded
from .graph_core import (
    Graph,
    connected_graph_catalog,
    cycle_graph,
    delete_edge,
    is_cycle,
    is_tree,
    is_whisker,
    path_graph,
)
from .homology import (
    MAX_BETTI_VARS,
    betti_from_linear_quotients,
    graded_betti,
    has_linear_resolution,
    has_only_linear_first_syzygies,
    invariants_from_betti,
    is_pure,
    linear_quotients_certificate,
    reg_via_dual,
    tree_betti_formula,
)
from .monomial_ideal import (
    MAX_FACE_VARS,
    MonomialIdeal,
    colon_by_monomial,
    embed,
    intersect,
    intersect_all,
    krull_dimension,
    minimal_primes,
    minimalize,
    multiplicity,
    prime_ideal,
)
from .structure import (
    check_cm_characterization,
    contains_ideal,
    cycle_decomposition,
    cycle_parity_ok,
    general_decomposition,
    height_classification,
    is_unmixed,
)

CHECKS = (
    "catalog_count",
    "generator_count",
    "one_variable_per_edge",
    "subgraph_containment",
    "decomposition_equality",
    "primes_contain_ideal",
    "cycle_parity",
    "height_bound",
    "unmixed_iff_tree",
    "whisker_identity",
    "edge_colon_identity",
    "subgraph_intersection",
    "dimension_multiplicity",
    "hochster_generators",
    "tree_betti",
    "linear_quotients",
    "cycle_invariants",
    "terai_agreement",
    "linear_resolution_iff_tree",
    "cm_iff_single_edge",
    "characteristic_agreement",
)

MAX_VERIFY_VERTICES = 5
DEFAULT_BETTI_EDGES = 4
MAX_BETTI_EDGES = MAX_BETTI_VARS // 2


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} ({self.cases} cases)"
        if self.failures:
            text += ": " + "; ".join(self.failures[:3])
        return text

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "failures": self.failures}


def chorded_square() -> Graph:
    return Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])


def partition_ideal(n: int, edges, context: VarContext) -> MonomialIdeal:
    """Ideal of the cut monomials of an arbitrary (possibly disconnected) edge set.

    Used for bridge deletions, where the remaining graph is not a ``Graph``.
    """
    m = context.m
    index = {e: k for k, e in enumerate(context.edges)}
    gens = []
    for side_b in range(0, 1 << n, 2):
        mono = 0
        for a, b in edges:
            k = index[(a, b)]
            crossing = (side_b >> (a - 1) & 1) != (side_b >> (b - 1) & 1)
            mono |= 1 << (k if crossing else m + k)
        gens.append(mono)
    return minimalize(gens, context)


def _count_connected(n: int) -> int:
    """Brute-force count of labelled connected graphs via union-find."""
    pairs = list(combinations(range(n), 2))
    total = 0
    for mask in range(1 << len(pairs)):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k, (a, b) in enumerate(pairs):
            if mask >> k & 1:
                parent[find(a)] = find(b)
        total += len({find(v) for v in range(n)}) == 1
    return total


def check_graph(g: Graph, betti_edges: int = DEFAULT_BETTI_EDGES,
                fault: bool = False) -> dict[str, list[str]]:
    """Run every per-graph statement on ``g``; returns failures per check name.

    A check absent from the result did not apply to ``g``.
    """
    out: dict[str, list[str]] = {}
    tag = g.to_text()

    def record(name: str, ok: bool, why: str = ""):
        fails = out.setdefault(name, [])
        if not ok:
            fails.append(f"[{tag}] {why}".rstrip())

    ideal = cut_ideal(g)
    ctx = ideal.context
    gens = ideal.gens
    record("generator_count", len(gens) == 2 ** (g.n - 1)
           and all(a == b or a & ~b for a in gens for b in gens),
           f"{len(gens)} generators")
    if g.m == 0:
        return out

    record("one_variable_per_edge",
           all(bin(u & (ctx.s(k) | ctx.t(k))).count("1") == 1 for u in gens for k in range(g.m)))

    dec = general_decomposition(g, drop_cycle_prime=fault)
    oracle = minimal_primes(ideal)
    record("decomposition_equality", dec.prime_set() == frozenset(oracle),
           f"structural {len(dec)} vs oracle {len(oracle)}")
    record("primes_contain_ideal", all(contains_ideal(p, ideal) for p in dec.primes))

    report = height_classification(dec, g)
    if g.m == 1:
        # the lone prime (s_e, t_e) has height 2 > |E|; the bound needs |E| >= 2
        record("height_bound", report.histogram == {2: 1}, f"heights {report.histogram}")
    else:
        special = is_cycle(g) or (g.n == 3 and g.m == 2)
        record("height_bound", report.bound_holds and report.attains_edge_count == special,
               f"heights {report.histogram}")
    record("unmixed_iff_tree", is_unmixed(dec) == is_tree(g))

    if is_cycle(g):
        record("cycle_parity", cycle_parity_ok(cycle_decomposition(g), g.m))

    for e in range(g.m):
        if g.m == 1:
            break
        try:
            deleted = delete_edge(g, e)
        except GraphError:
            deleted = None
        w = ctx.s(e) | ctx.t(e)
        colon = colon_by_monomial(ideal, w)
        if deleted is not None:
            sub_ideal = cut_ideal(deleted.graph)
            sub = embed(sub_ideal, ctx, deleted.edge_map)
            record("subgraph_containment",
                   all(restrict_monomial(u, g.m, deleted.edge_map) in sub_ideal.gens for u in gens))
        else:
            # non-whisker bridge: remaining graph is disconnected
            sub = partition_ideal(g.n, [x for k, x in enumerate(g.edges) if k != e], ctx)
        record("edge_colon_identity", colon.gens == sub.gens, f"edge {g.edges[e]}")
        if is_whisker(g, e):
            rebuilt = intersect(sub, prime_ideal(w, ctx))
            record("whisker_identity", rebuilt.gens == gens, f"edge {g.edges[e]}")

    if not is_cycle(g) and 2 <= g.m <= 5:
        subs = []
        for e in range(g.m):
            try:
                d = delete_edge(g, e)
            except GraphError:
                continue
            subs.append(embed(cut_ideal(d.graph), ctx, d.edge_map))
        record("subgraph_intersection", bool(subs) and intersect_all(subs).gens == gens)

    if ctx.nvars <= MAX_FACE_VARS:
        dim, e_mult = krull_dimension(ideal), multiplicity(ideal)
        record("dimension_multiplicity", dim == 2 * g.m - 2 and e_mult == g.m,
               f"dim {dim} e {e_mult}")

    if g.m <= min(betti_edges + 1, MAX_BETTI_EDGES):
        table = graded_betti(ideal)
        by_degree = defaultdict(int)
        for u in gens:
            by_degree[bin(u).count("1")] += 1
        hochster = {j: v for (i, j), v in table.items() if i == 1}
        record("hochster_generators", hochster == dict(by_degree))

    if g.m <= betti_edges:
        table = graded_betti(ideal)
        inv = invariants_from_betti(table, ctx.nvars)
        if is_tree(g):
            r = g.m
            cert = linear_quotients_certificate(ideal)
            ok = (table.ideal_totals() == [tree_betti_formula(r, i) for i in range(r + 1)]
                  and cert is not None
                  and betti_from_linear_quotients(cert) == table.ideal_totals()
                  and inv.reg == r - 1 and inv.depth == r - 1)
            record("tree_betti", ok, f"totals {table.ideal_totals()}")
        record("terai_agreement", reg_via_dual(ideal) == inv.reg)
        record("linear_resolution_iff_tree",
               has_linear_resolution(table, g.m) == is_tree(g)
               and has_only_linear_first_syzygies(table, g.m) == is_tree(g))
        cm = check_cm_characterization(g)
        record("cm_iff_single_edge", cm.consistent, f"depth {cm.depth} dim {cm.dim}")
        record("characteristic_agreement", graded_betti(ideal, 3).entries == table.entries)
    return out


def _standalone_checks() -> list[tuple[str, bool, str]]:
    rows = []
    for r in range(1, 7):
        ideal = cut_ideal(path_graph(r))
        cert = linear_quotients_certificate(ideal)
        ok = cert is not None and cert.check()
        if ok:
            for u, w in zip(cert.order, cert.witness_sets):
                expected = (u >> r) & ((1 << r) - 1)
                ok &= w == expected
        rows.append(("linear_quotients", ok, f"T_{r}"))
    for r in (3, 4, 5):
        ideal = cut_ideal(cycle_graph(r))
        table = graded_betti(ideal)
        inv = invariants_from_betti(table, ideal.nvars)
        ok = (inv.reg == r and inv.depth == r and is_pure(table)
              and table[2, r + 1] == 0
              and all(j == r for i, j in ((i, j - i) for i, j in table.entries) if i >= 2))
        rows.append(("cycle_invariants", ok, f"C_{r}"))
    return rows


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("CUTIDEAL_THREADS", "1")))
    except ValueError:
        return 1


def run_verification(n_max: int, betti_edges: int = DEFAULT_BETTI_EDGES,
                     fault: bool = False) -> tuple[list[CheckResult], dict[int, int]]:
    if not 1 <= n_max <= MAX_VERIFY_VERTICES:
        raise GuardExceeded(f"verify supports 1 <= n_max <= {MAX_VERIFY_VERTICES}")
    if not 0 <= betti_edges <= MAX_BETTI_EDGES:
        raise GuardExceeded(f"--max-edges must be at most {MAX_BETTI_EDGES}")
    results = {name: CheckResult(name) for name in CHECKS}

    catalog = list(connected_graph_catalog(n_max))
    sizes: dict[int, int] = defaultdict(int)
    for g in catalog:
        sizes[g.n] += 1
    for n, count in sizes.items():
        res = results["catalog_count"]
        res.cases += 1
        if count != _count_connected(n):
            res.failures.append(f"n={n}: catalog {count}")

    extras = [cycle_graph(r) for r in range(3, 7) if r > n_max] + [chorded_square()]
    graphs = catalog + extras
    workers = _worker_count()
    args = [(g, betti_edges, fault) for g in graphs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_check_star, args, chunksize=16))
    else:
        outcomes = [_check_star(a) for a in args]
    for outcome in outcomes:
        for name, fails in outcome.items():
            results[name].cases += 1
            results[name].failures.extend(fails)

    for name, ok, why in _standalone_checks():
        results[name].cases += 1
        if not ok:
            results[name].failures.append(why)
    return [results[name] for name in CHECKS], dict(sizes)


def _check_star(args) -> dict[str, list[str]]:
    return check_graph(*args)
