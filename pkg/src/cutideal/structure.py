"""Closed-form minimal primes of monomial cut ideals and theorem checks.

Trees contribute one prime ``(s_e, t_e)`` per edge.  A cycle of length
``r`` adds the supports of the one-per-edge monomials whose s-degree is
even (``r`` odd) or odd (``r`` even).  A general graph collects the edge
primes and the large primes of every simple cycle it contains.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .cut_monomials import (
    VarContext,
    cut_ideal,
    embed_monomial,
    one_per_edge_monomials,
    s_degree,
    support,
)
from .errors import GraphError, GuardExceeded
from .graph_core import MAX_CYCLE_EDGES, Graph, enumerate_cycles, is_cycle, is_tree
from .homology import graded_betti, invariants_from_betti
from .monomial_ideal import (
    MonomialIdeal,
    PrimeSupport,
    alexander_dual,
    krull_dimension,
)

MAX_CM_EDGES = 4


@dataclass(frozen=True)
class Decomposition:
    """Minimal primes with a provenance tag each (``"edge"`` or ``"cycle:1,2,3"``)."""

    context: VarContext
    primes: tuple[PrimeSupport, ...]
    provenance: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.primes)

    def heights(self) -> list[int]:
        return [bin(p).count("1") for p in self.primes]

    def prime_set(self) -> frozenset[int]:
        return frozenset(self.primes)

    def to_json(self) -> list[dict]:
        names = self.context.names()
        return [
            {"height": bin(p).count("1"), "vars": [names[v] for v in support(p)], "provenance": tag}
            for p, tag in zip(self.primes, self.provenance)
        ]


def _finish(context: VarContext, tagged: list[tuple[int, str]]) -> Decomposition:
    """Drop non-minimal primes, keep the first tag seen, sort by (height, vars)."""
    tags: dict[int, str] = {}
    for p, tag in tagged:
        tags.setdefault(p, tag)
    primes = [p for p in tags if not any(q != p and q & ~p == 0 for q in tags)]
    primes.sort(key=lambda p: (bin(p).count("1"), support(p)))
    return Decomposition(context, tuple(primes), tuple(tags[p] for p in primes))


def _edge_primes(g: Graph) -> list[tuple[int, str]]:
    ctx = VarContext.of(g)
    return [(ctx.s(k) | ctx.t(k), "edge") for k in range(g.m)]


def _cycle_large_primes(r: int) -> list[int]:
    """Height-r primes of a cycle of length r, in that cycle's own context."""
    parity = "even" if r % 2 else "odd"
    return one_per_edge_monomials(r, parity)


def tree_decomposition(g: Graph) -> Decomposition:
    if not is_tree(g):
        raise GraphError("not a tree")
    return _finish(VarContext.of(g), _edge_primes(g))


def cycle_decomposition(g: Graph) -> Decomposition:
    if not is_cycle(g):
        raise GraphError("not a cycle")
    tag = "cycle:" + ",".join(map(str, g.vertices))
    tagged = _edge_primes(g) + [(p, tag) for p in _cycle_large_primes(g.m)]
    return _finish(VarContext.of(g), tagged)


def general_decomposition(g: Graph, *, drop_cycle_prime: bool = False) -> Decomposition:
    """Edge primes plus the height-|C| primes of every simple cycle C.

    ``drop_cycle_prime`` deliberately loses one prime; it exists only so the
    verification suite can prove it notices a corrupted table.
    """
    if g.m > MAX_CYCLE_EDGES:
        raise GuardExceeded(f"decomposition is capped at {MAX_CYCLE_EDGES} edges")
    ctx = VarContext.of(g)
    tagged = _edge_primes(g)
    for cyc in enumerate_cycles(g):
        # s-degree parity does not depend on how the cycle's edges are indexed
        tag = "cycle:" + ",".join(map(str, cyc.vertices))
        for p in _cycle_large_primes(cyc.length):
            tagged.append((embed_monomial(p, cyc.length, g.m, cyc.edge_indices), tag))
    dec = _finish(ctx, tagged)
    if drop_cycle_prime and len(dec.primes) > g.m:
        return Decomposition(ctx, dec.primes[:-1], dec.provenance[:-1])
    return dec


class HeightReport(NamedTuple):
    histogram: dict[int, int]
    max_height: int
    attains_edge_count: bool
    bound_holds: bool


def height_classification(dec: Decomposition, g: Graph) -> HeightReport:
    hist = dict(sorted(Counter(dec.heights()).items()))
    top = max(hist) if hist else 0
    return HeightReport(hist, top, g.m in hist, top <= g.m)


def is_unmixed(dec: Decomposition) -> bool:
    return len(set(dec.heights())) <= 1


def contains_ideal(prime: PrimeSupport, ideal: MonomialIdeal) -> bool:
    """The prime generated by ``prime`` contains every generator of ``ideal``."""
    return all(g & prime for g in ideal.gens)


def cycle_parity_ok(dec: Decomposition, r: int) -> bool:
    """Non-edge primes of ``C_r`` have even s-degree for odd r, odd for even r."""
    want = 0 if r % 2 else 1
    return all(s_degree(p, dec.context) % 2 == want
               for p, tag in zip(dec.primes, dec.provenance) if tag != "edge")


class CMReport(NamedTuple):
    depth: int
    dim: int
    cohen_macaulay: bool
    single_edge: bool
    dual_degree2_is_edge_products: bool
    dual_degree2_principal: bool

    @property
    def consistent(self) -> bool:
        return (self.cohen_macaulay == self.single_edge
                and self.dual_degree2_is_edge_products
                and self.dual_degree2_principal == self.single_edge)


def check_cm_characterization(g: Graph, p: int = 2) -> CMReport:
    """Compare depth with dim and inspect the quadrics of the Alexander dual."""
    if g.m > MAX_CM_EDGES:
        raise GuardExceeded(f"CM check is capped at {MAX_CM_EDGES} edges")
    ideal = cut_ideal(g)
    inv = invariants_from_betti(graded_betti(ideal, p), ideal.nvars)
    dim = krull_dimension(ideal)
    ctx = ideal.context
    quadrics = sorted(u for u in alexander_dual(ideal).gens if bin(u).count("1") == 2)
    expected = sorted(ctx.s(k) | ctx.t(k) for k in range(g.m))
    return CMReport(
        depth=inv.depth,
        dim=dim,
        cohen_macaulay=inv.depth == dim,
        single_edge=g.m == 1,
        dual_degree2_is_edge_products=quadrics == expected,
        dual_degree2_principal=len(quadrics) == 1,
    )
