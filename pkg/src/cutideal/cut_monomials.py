"""Cut sets, cut monomials and the monomial cut ideal of a graph.

A squarefree monomial over ``S = k[s_e, t_e : e in E]`` is an ``int`` whose
bit ``k`` is ``s_{e_k}`` for ``k < m`` and whose bit ``m + k`` is
``t_{e_k}``.  The s-block comes first; inside a block the canonical edge
order is kept.  Lex comparisons treat lower indices as larger variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .errors import GuardExceeded
from .graph_core import Edge, Graph, cycle_graph, path_graph

if TYPE_CHECKING:
    from .monomial_ideal import MonomialIdeal

Monomial = int

MAX_PARTITION_VERTICES = 24


@dataclass(frozen=True)
class VarContext:
    """The ``2m`` variables ``s_e, t_e`` for an ordered edge list."""

    edges: tuple[Edge, ...]

    @classmethod
    def of(cls, g: Graph) -> VarContext:
        return cls(g.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def nvars(self) -> int:
        return 2 * len(self.edges)

    @property
    def s_mask(self) -> int:
        return (1 << self.m) - 1

    @property
    def t_mask(self) -> int:
        return self.s_mask << self.m

    @property
    def full_mask(self) -> int:
        return (1 << self.nvars) - 1

    def s(self, k: int) -> int:
        return 1 << k

    def t(self, k: int) -> int:
        return 1 << (self.m + k)

    def name(self, var: int) -> str:
        if not 0 <= var < self.nvars:
            raise IndexError(var)
        letter = "s" if var < self.m else "t"
        a, b = self.edges[var % self.m]
        return f"{letter}_{{{a},{b}}}"

    def names(self) -> list[str]:
        return [self.name(v) for v in range(self.nvars)]

    def index(self, name: str) -> int:
        return self.names().index(name)


@dataclass(frozen=True, order=True)
class Partition:
    """Unordered bipartition ``A|B`` stored by ``B``, the side without vertex 1.

    ``side_b`` is a bitmask with bit ``v - 1`` set for every vertex ``v`` in B.
    """

    side_b: int

    def __post_init__(self):
        if self.side_b & 1:
            raise ValueError("vertex 1 must lie on side A")

    def b_vertices(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in range(self.side_b.bit_length()) if self.side_b >> v & 1)

    def in_b(self, v: int) -> bool:
        return bool(self.side_b >> (v - 1) & 1)


def support(mono: Monomial) -> list[int]:
    """Sorted variable indices of a squarefree monomial."""
    out = []
    k = 0
    while mono:
        if mono & 1:
            out.append(k)
        mono >>= 1
        k += 1
    return out


def degree(mono: Monomial) -> int:
    return bin(mono).count("1")


def s_degree(mono: Monomial, ctx: VarContext) -> int:
    return degree(mono & ctx.s_mask)


def t_degree(mono: Monomial, ctx: VarContext) -> int:
    return degree(mono & ctx.t_mask)


def divides(a: Monomial, b: Monomial) -> bool:
    return a & ~b == 0


def lex_key(mono: Monomial, nvars: int) -> int:
    """Integer whose natural order is lex order (variable 0 largest)."""
    return int(format(mono, f"0{nvars}b")[::-1], 2) if nvars else 0


def render(mono: Monomial, ctx: VarContext) -> str:
    if mono == 0:
        return "1"
    return " ".join(ctx.name(v) for v in support(mono))


def monomial_from_names(names: Sequence[str], ctx: VarContext) -> Monomial:
    lookup = {nm: v for v, nm in enumerate(ctx.names())}
    mono = 0
    for nm in names:
        mono |= 1 << lookup[nm]
    return mono


def enumerate_partitions(g: Graph) -> list[Partition]:
    """All ``2^(n-1)`` unordered partitions, ascending by ``side_b``."""
    if g.n > MAX_PARTITION_VERTICES:
        raise GuardExceeded(f"partition enumeration is capped at {MAX_PARTITION_VERTICES} vertices")
    return [Partition(b << 1) for b in range(1 << (g.n - 1))]


def cut_set(g: Graph, p: Partition) -> set[int]:
    return {k for k, (a, b) in enumerate(g.edges) if p.in_b(a) != p.in_b(b)}


def cut_monomial(g: Graph, p: Partition) -> Monomial:
    """``u_{A|B}``: ``s_e`` on cut edges, ``t_e`` elsewhere."""
    m = g.m
    mono = 0
    for k, (a, b) in enumerate(g.edges):
        crossing = bool(p.side_b >> (a - 1) & 1) != bool(p.side_b >> (b - 1) & 1)
        mono |= 1 << (k if crossing else m + k)
    return mono


def cut_monomials(g: Graph) -> list[Monomial]:
    """Cut monomials in partition order (duplicates kept)."""
    return [cut_monomial(g, p) for p in enumerate_partitions(g)]


def cut_ideal(g: Graph) -> MonomialIdeal:
    from .monomial_ideal import minimalize

    return minimalize(cut_monomials(g), VarContext.of(g))


def one_per_edge_monomials(m: int, parity: str | None = None) -> list[Monomial]:
    """Monomials picking exactly one of ``s_e, t_e`` per edge.

    With ``parity`` set to ``"even"``/``"odd"`` only those whose s-degree has
    that parity are kept.  Output is in descending lex order.
    """
    if parity not in (None, "even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    full_s = (1 << m) - 1
    out = []
    for s_bits in range(1 << m):
        if parity is not None and (degree(s_bits) % 2 == 0) != (parity == "even"):
            continue
        out.append(s_bits | ((full_s ^ s_bits) << m))
    out.sort(key=lambda u: lex_key(u, 2 * m), reverse=True)
    return out


def path_generators(r: int) -> list[Monomial]:
    """``M_r(T_r)`` in the variable context of ``path_graph(r)``."""
    path_graph(r)
    return one_per_edge_monomials(r)


def cycle_generators(r: int, parity: str) -> list[Monomial]:
    """``M_e(C_r)`` or ``M_o(C_r)`` in the context of ``cycle_graph(r)``."""
    cycle_graph(r)
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    return one_per_edge_monomials(r, parity)


def embed_monomial(mono: Monomial, m_sub: int, m_parent: int, edge_map: Sequence[int]) -> Monomial:
    """Move a monomial of a subgraph context into its parent's context."""
    out = 0
    for k, parent in enumerate(edge_map):
        if mono >> k & 1:
            out |= 1 << parent
        if mono >> (m_sub + k) & 1:
            out |= 1 << (m_parent + parent)
    return out


def restrict_monomial(mono: Monomial, m_parent: int, edge_map: Sequence[int]) -> Monomial:
    """Drop the variables of parent edges absent from the subgraph."""
    m_sub = len(edge_map)
    out = 0
    for k, parent in enumerate(edge_map):
        if mono >> parent & 1:
            out |= 1 << k
        if mono >> (m_parent + parent) & 1:
            out |= 1 << (m_sub + k)
    return out
