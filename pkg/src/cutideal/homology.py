"""Graded Betti numbers of ``S/I`` through Hochster's formula.

``beta_{i,j}(S/I) = sum_{|W| = j} dim H~_{j-i-1}(Delta_W; k)`` where
``Delta`` is the Stanley-Reisner complex of ``I`` and ``Delta_W`` its
restriction to the vertex set ``W``.  Homology is computed from ranks of
boundary matrices over a prime field.  Also here: the linear-quotients
machinery for equigenerated ideals.
"""

from __future__ import annotations

import csv
import io
from collections import defaultdict
from dataclasses import dataclass, field
from math import comb
from typing import NamedTuple

from .cut_monomials import Monomial, VarContext, degree, support
from .errors import CutIdealError, GuardExceeded, UnitIdealError
from .monomial_ideal import MonomialIdeal, alexander_dual, minimalize

MAX_BETTI_VARS = 14
MAX_HOMOLOGY_VARS = 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _rank_gf2(columns: list[int]) -> int:
    pivots: dict[int, int] = {}
    for v in columns:
        while v:
            h = v.bit_length() - 1
            if h in pivots:
                v ^= pivots[h]
            else:
                pivots[h] = v
                break
    return len(pivots)


def _rank_mod_p(columns: list[dict[int, int]], p: int) -> int:
    """Rank of a sparse matrix given as ``{row: value}`` columns, mod ``p``."""
    pivots: dict[int, dict[int, int]] = {}
    for col in columns:
        v = {r: x % p for r, x in col.items() if x % p}
        while v:
            h = max(v)
            piv = pivots.get(h)
            if piv is None:
                inv = pow(v[h], -1, p)
                pivots[h] = {r: x * inv % p for r, x in v.items()}
                break
            f = v[h]
            for r, x in piv.items():
                y = (v.get(r, 0) - f * x) % p
                if y:
                    v[r] = y
                else:
                    v.pop(r, None)
    return len(pivots)


def _faces_by_size(sigma: int, nonfaces: list[int]) -> list[list[int]]:
    """Faces of the complex on ``sigma`` avoiding every mask in ``nonfaces``."""
    verts = support(sigma)
    by_size: list[list[int]] = [[] for _ in range(len(verts) + 1)]
    sub = sigma
    while True:
        if not any(g & ~sub == 0 for g in nonfaces):
            by_size[bin(sub).count("1")].append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & sigma
    while by_size and not by_size[-1]:
        by_size.pop()
    return by_size


def _boundary_rank(faces: list[int], lower: list[int], p: int) -> int:
    if not faces or not lower:
        return 0
    row = {f: r for r, f in enumerate(lower)}
    if p == 2:
        cols = []
        for f in faces:
            v = 0
            x = f
            while x:
                b = x & -x
                v |= 1 << row[f ^ b]
                x ^= b
            cols.append(v)
        return _rank_gf2(cols)
    cols = []
    for f in faces:
        col = {}
        for sign_pos, var in enumerate(support(f)):
            col[row[f ^ (1 << var)]] = -1 if sign_pos % 2 else 1
        cols.append(col)
    return _rank_mod_p(cols, p)


def _reduced_homology(sigma: int, nonfaces: list[int], p: int) -> list[int]:
    by_size = _faces_by_size(sigma, nonfaces)
    if not by_size:
        return []
    ranks = [0] + [_boundary_rank(by_size[k], by_size[k - 1], p) for k in range(1, len(by_size))] + [0]
    return [len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(len(by_size))]


def restricted_homology_ranks(ideal: MonomialIdeal, sigma: Monomial, p: int = 2) -> list[int]:
    """Reduced homology ranks of ``Delta_sigma`` over GF(p).

    Entry ``d + 1`` of the result is ``dim H~_d``, so the list starts at
    dimension -1.  Trailing dimensions without faces are omitted.
    """
    if not is_prime(p):
        raise CutIdealError(f"{p} is not prime")
    if ideal.nvars > MAX_HOMOLOGY_VARS:
        raise GuardExceeded(f"homology is capped at {MAX_HOMOLOGY_VARS} variables")
    if sigma & ~ideal.context.full_mask:
        raise CutIdealError("sigma uses variables outside the context")
    inside = [g for g in ideal.gens if g & ~sigma == 0]
    return _reduced_homology(sigma, inside, p)


@dataclass
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}(S/I)`` over GF(char); zeros omitted."""

    char: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def items(self):
        return sorted(self.entries.items())

    def column_totals(self) -> list[int]:
        """``beta_i(S/I)`` for ``i = 0..projdim``."""
        if not self.entries:
            return []
        top = max(i for i, _ in self.entries)
        totals = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            totals[i] += v
        return totals

    def ideal_totals(self) -> list[int]:
        """``beta_i(I) = beta_{i+1}(S/I)``."""
        return self.column_totals()[1:]

    def to_json(self) -> dict:
        return {
            "char": self.char,
            "entries": [{"i": i, "j": j, "value": v} for (i, j), v in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> BettiTable:
        return cls(data["char"], {(e["i"], e["j"]): e["value"] for e in data["entries"] if e["value"]})

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "value"])
        for (i, j), v in self.items():
            w.writerow([i, j, v])
        return buf.getvalue()

    def diagram(self) -> str:
        """Macaulay2-style diagram: columns i, rows j - i."""
        totals = self.column_totals()
        rows = sorted({j - i for i, j in self.entries})
        width = max([len(str(v)) for v in totals] + [len(str(len(totals) - 1))]) + 1
        lines = ["       " + "".join(f"{i:>{width}}" for i in range(len(totals))),
                 "total: " + "".join(f"{v:>{width}}" for v in totals)]
        for r in rows:
            cells = []
            for i in range(len(totals)):
                v = self[i, i + r]
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{r:>5}: " + "".join(cells))
        return "\n".join(lines)


def graded_betti(ideal: MonomialIdeal, p: int = 2) -> BettiTable:
    """Hochster's formula summed over every subset of the variables.

    Subsets that are not a union of generator supports restrict to a cone
    (or a full simplex) and contribute nothing, so they are skipped; the
    empty subset supplies ``beta_{0,0} = 1``.
    """
    if not is_prime(p):
        raise CutIdealError(f"{p} is not prime")
    n = ideal.nvars
    if n > MAX_BETTI_VARS:
        raise GuardExceeded(f"graded Betti numbers are capped at {MAX_BETTI_VARS} variables, got {n}")
    if ideal.is_unit:
        raise UnitIdealError("S/I is zero for the unit ideal")
    entries: dict[tuple[int, int], int] = defaultdict(int)
    entries[0, 0] = 1
    gens = list(ideal.gens)
    for sigma in range(1, 1 << n):
        inside = [g for g in gens if g & ~sigma == 0]
        union = 0
        for g in inside:
            union |= g
        if union != sigma:
            continue
        j = bin(sigma).count("1")
        for pos, h in enumerate(_reduced_homology(sigma, inside, p)):
            if h:
                # position pos holds dimension pos - 1 = j - i - 1
                entries[j - pos, j] += h
    return BettiTable(p, dict(entries))


class Invariants(NamedTuple):
    projdim: int
    reg: int
    depth: int


def invariants_from_betti(table: BettiTable, num_vars: int) -> Invariants:
    """projdim, regularity and depth (Auslander-Buchsbaum) of ``S/I``."""
    if not table.entries:
        raise CutIdealError("empty Betti table")
    projdim = max(i for i, _ in table.entries)
    reg = max(j - i for i, j in table.entries)
    return Invariants(projdim, reg, num_vars - projdim)


def has_linear_resolution(table: BettiTable, d: int) -> bool:
    return all(j == d + i - 1 for (i, j) in table.entries if i >= 1)


def is_pure(table: BettiTable) -> bool:
    seen: dict[int, int] = {}
    for i, j in table.entries:
        if seen.setdefault(i, j) != j:
            return False
    return True


def has_linear_first_syzygies(table: BettiTable, d: int) -> bool:
    """Some relation among the degree-``d`` generators is linear."""
    return table[2, d + 1] != 0


def has_only_linear_first_syzygies(table: BettiTable, d: int) -> bool:
    """Every minimal first syzygy is linear."""
    return all(j == d + 1 for (i, j) in table.entries if i == 2)


def reg_via_dual(ideal: MonomialIdeal, p: int = 2) -> int:
    """``reg(S/I)`` as the projective dimension of the ideal ``I^vee``."""
    dual = alexander_dual(ideal)
    table = graded_betti(dual, p)
    return max(i for i, _ in table.entries) - 1


def tree_betti_formula(edges: int, i: int) -> int:
    """``beta_i(I(G)) = 2^(|E|-i) * C(|E|, i)`` for a tree ``G``."""
    if not 0 <= i <= edges:
        raise CutIdealError(f"need 0 <= i <= {edges}, got {i}")
    return 2 ** (edges - i) * comb(edges, i)


@dataclass(frozen=True)
class LinearQuotientsCertificate:
    """Generators in order, with ``set(u_k)`` as a variable bitmask."""

    context: VarContext
    order: tuple[Monomial, ...]
    witness_sets: tuple[int, ...]

    @property
    def set_sizes(self) -> tuple[int, ...]:
        return tuple(bin(w).count("1") for w in self.witness_sets)

    def check(self) -> bool:
        """Re-verify the defining condition on the stored order.

        For all ``k`` and ``j < k`` some ``l < k`` has ``u_l / gcd(u_l, u_k)``
        equal to a single variable that divides ``u_j / gcd(u_j, u_k)``.
        """
        us = self.order
        for k in range(1, len(us)):
            singles = {us[l] & ~us[k] for l in range(k) if bin(us[l] & ~us[k]).count("1") == 1}
            for j in range(k):
                quotient = us[j] & ~us[k]
                if not any(x & quotient for x in singles):
                    return False
        return True


def linear_quotients_certificate(ideal: MonomialIdeal) -> LinearQuotientsCertificate | None:
    """Test linear quotients for the descending lex order of the generators.

    ``None`` means this particular order fails; other orders are not tried.
    """
    degs = set(ideal.degrees())
    if len(degs) > 1:
        raise CutIdealError("linear quotients are only tested for equigenerated ideals")
    us = ideal.gens
    witness = [0]
    for k in range(1, len(us)):
        colon = minimalize([us[j] & ~us[k] for j in range(k)], ideal.context)
        if any(degree(g) != 1 for g in colon.gens):
            return None
        w = 0
        for g in colon.gens:
            w |= g
        witness.append(w)
    return LinearQuotientsCertificate(ideal.context, us, tuple(witness))


def betti_from_linear_quotients(cert: LinearQuotientsCertificate) -> list[int]:
    """``beta_i(I) = sum_k C(r_k, i)``, counting the first generator with ``r_1 = 0``."""
    sizes = cert.set_sizes
    return [sum(comb(r, i) for r in sizes) for i in range(max(sizes) + 1)]
