"""Squarefree monomial ideals over a fixed variable context.

Everything here works on bitmask monomials and knows nothing about cut
ideals, so it doubles as the brute-force oracle for the closed-form
decompositions in :mod:`cutideal.structure`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .cut_monomials import (
    Monomial,
    VarContext,
    degree,
    embed_monomial,
    lex_key,
    monomial_from_names,
    render,
    support,
)
from .errors import ContextMismatch, CutIdealError, GuardExceeded, UnitIdealError

MAX_FACE_VARS = 16

PrimeSupport = int


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generators, sorted descending in lex order.

    The unit ideal is represented by the single generator ``0`` (the empty
    monomial).  Build instances through :func:`minimalize`.
    """

    context: VarContext
    gens: tuple[Monomial, ...]

    @property
    def is_unit(self) -> bool:
        return self.gens == (0,)

    @property
    def nvars(self) -> int:
        return self.context.nvars

    def __len__(self) -> int:
        return len(self.gens)

    def __contains__(self, mono: Monomial) -> bool:
        return any(g & ~mono == 0 for g in self.gens)

    def degrees(self) -> list[int]:
        return [degree(g) for g in self.gens]

    def __str__(self) -> str:
        return "(" + ", ".join(render(g, self.context).replace(" ", "") for g in self.gens) + ")"

    def to_json(self) -> dict:
        names = self.context.names()
        return {
            "vars": names,
            "gens": [[names[v] for v in support(g)] for g in self.gens],
        }

    @classmethod
    def from_json(cls, data: dict, context: VarContext) -> MonomialIdeal:
        if list(data["vars"]) != context.names():
            raise ContextMismatch("serialized variables do not match the context")
        return minimalize([monomial_from_names(g, context) for g in data["gens"]], context)


def _check_same(a: MonomialIdeal, b: MonomialIdeal):
    if a.context != b.context:
        raise ContextMismatch("ideals live in different variable contexts")


def _minimal_sets(sets: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family of bitmasks (deduplicated)."""
    out: list[int] = []
    for s in sorted(set(sets), key=lambda x: bin(x).count("1")):
        if not any(k & ~s == 0 for k in out):
            out.append(s)
    return out


def minimalize(gens: Sequence[Monomial], context: VarContext) -> MonomialIdeal:
    """Divisibility-minimal, deduplicated, lex-descending generator set."""
    if len(gens) == 0:
        raise CutIdealError("an ideal needs at least one generator")
    full = context.full_mask
    for g in gens:
        if g & ~full:
            raise ContextMismatch(f"monomial {g:#x} uses variables outside the context")
    mins = _minimal_sets(gens)
    mins.sort(key=lambda u: lex_key(u, context.nvars), reverse=True)
    return MonomialIdeal(context, tuple(mins))


def prime_ideal(prime: PrimeSupport, context: VarContext) -> MonomialIdeal:
    """The ideal generated by the variables in ``prime``."""
    if prime == 0:
        raise CutIdealError("a prime support must be nonempty")
    return minimalize([1 << v for v in support(prime)], context)


def colon_by_monomial(ideal: MonomialIdeal, w: Monomial) -> MonomialIdeal:
    """``I : w``; may be the unit ideal (check ``is_unit``)."""
    return minimalize([u & ~w for u in ideal.gens], ideal.context)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same(a, b)
    return minimalize([u | v for u in a.gens for v in b.gens], a.context)


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise CutIdealError("empty intersection")
    acc = ideals[0]
    for other in ideals[1:]:
        acc = intersect(acc, other)
    return acc


def equals(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    _check_same(a, b)
    return a.gens == b.gens


def embed(ideal: MonomialIdeal, parent: VarContext, edge_map: Sequence[int]) -> MonomialIdeal:
    """Rewrite a subgraph's ideal in the parent context.

    ``edge_map[k]`` is the parent edge index of the subgraph's ``k``-th edge.
    """
    m_sub = ideal.context.m
    if len(edge_map) != m_sub:
        raise ContextMismatch("edge map length differs from the subgraph edge count")
    return minimalize([embed_monomial(g, m_sub, parent.m, edge_map) for g in ideal.gens], parent)


def minimal_transversals(hyperedges: Iterable[int]) -> list[int]:
    """Minimal hitting sets of a family of bitmasks (Berge's product).

    Each step keeps the transversals already hitting the new hyperedge and
    extends the others by one of its vertices.  A kept set can never be a
    proper superset of an extended one, so only extended sets are checked.
    """
    edges = _minimal_sets(hyperedges)
    if 0 in edges:
        return []
    trans = [0]
    for e in edges:
        bits = [1 << v for v in support(e)]
        keep = [t for t in trans if t & e]
        fresh = set()
        for t in trans:
            if t & e:
                continue
            for b in bits:
                c = t | b
                if not any(k & ~c == 0 for k in keep):
                    fresh.add(c)
        trans = keep + _minimal_sets(fresh)
    return trans


def _prime_order(p: int) -> tuple[int, list[int]]:
    return (bin(p).count("1"), support(p))


def minimal_primes(ideal: MonomialIdeal) -> list[PrimeSupport]:
    """Minimal primes as variable bitmasks, sorted by (height, variables)."""
    if ideal.is_unit:
        return []
    return sorted(minimal_transversals(ideal.gens), key=_prime_order)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal has no Alexander dual here")
    return minimalize(minimal_primes(ideal), ideal.context)


def _popcount(arr: np.ndarray) -> np.ndarray:
    counts = np.zeros(arr.shape, dtype=np.int64)
    x = arr.copy()
    while x.any():
        counts += x & 1
        x >>= 1
    return counts


def sr_faces(ideal: MonomialIdeal) -> list[int]:
    """f-vector of the Stanley-Reisner complex, indexed by face size.

    ``f[0]`` counts the empty face.  The unit ideal has no faces at all.
    """
    n = ideal.nvars
    if n > MAX_FACE_VARS:
        raise GuardExceeded(f"face enumeration is capped at {MAX_FACE_VARS} variables, got {n}")
    if ideal.is_unit:
        return []
    subsets = np.arange(1 << n, dtype=np.int64)
    is_face = np.ones(subsets.shape, dtype=bool)
    for g in ideal.gens:
        is_face &= (subsets & g) != g
    sizes = _popcount(subsets[is_face])
    return np.bincount(sizes, minlength=1).tolist()


def krull_dimension(ideal: MonomialIdeal) -> int:
    """``dim S/I``, the size of the largest face."""
    f = sr_faces(ideal)
    if not f:
        raise UnitIdealError("S/I is zero for the unit ideal")
    return len(f) - 1


def multiplicity(ideal: MonomialIdeal) -> int:
    """Number of faces of maximal size."""
    f = sr_faces(ideal)
    if not f:
        raise UnitIdealError("S/I is zero for the unit ideal")
    return f[-1]


def primes_to_json(primes: Sequence[PrimeSupport], context: VarContext) -> list[list[str]]:
    names = context.names()
    return [[names[v] for v in support(p)] for p in primes]
