"""Exact and modular sparse rank computation over the rationals.

Matrices are immutable triple lists; rank is computed either by
fraction-free Gaussian elimination over the integers (after clearing
denominators row by row, which does not change the rank) or modulo
several large primes with an agreement rule: since rank mod p is at most
the rank over Q with equality for all but finitely many p, the maximum
is reported when the two largest modular ranks agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .parallel import parallel_map

# primes just below 2^31
DEFAULT_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579)


class RankDisagreement(RuntimeError):
    """Modular ranks disagree across all primes; exact mode required."""


@dataclass(frozen=True)
class RankMode:
    kind: str = "modular"            # "exact" | "modular"
    primes: tuple = DEFAULT_PRIMES[:2]
    exact_fallback: bool = True

    def __post_init__(self):
        if self.kind == "modular":
            if len(set(self.primes)) < 2:
                raise ValueError("modular mode needs >= 2 distinct primes")
            if any(p <= 2 ** 20 for p in self.primes):
                raise ValueError("modular primes must exceed 2^20")


EXACT = RankMode("exact")
MODULAR = RankMode("modular")


@dataclass(frozen=True)
class SparseMatrix:
    """rows x cols matrix given by triples sorted by (col, row)."""

    rows: int
    cols: int
    triples: tuple  # ((row, col, Fraction), ...)

    @classmethod
    def from_entries(cls, rows, cols, entries):
        trip = []
        for (r, c), v in entries.items() if isinstance(entries, dict) \
                else ((e[:2], e[2]) for e in entries):
            v = Fraction(v)
            if v:
                if not (0 <= r < rows and 0 <= c < cols):
                    raise ValueError(f"entry ({r},{c}) out of range")
                trip.append((r, c, v))
        trip.sort(key=lambda t: (t[1], t[0]))
        return cls(rows, cols, tuple(trip))

    @property
    def nnz(self):
        return len(self.triples)

    def transpose(self):
        return SparseMatrix.from_entries(
            self.cols, self.rows,
            {(c, r): v for r, c, v in self.triples})

    def row_major(self):
        """Integer row dicts with cleared denominators (rank-preserving)."""
        rows = {}
        for r, c, v in self.triples:
            rows.setdefault(r, {})[c] = v
        out = {}
        for r, row in rows.items():
            den = 1
            for v in row.values():
                den = den * v.denominator // gcd(den, v.denominator)
            out[r] = {c: int(v * den) for c, v in row.items()}
        return out

    def compose(self, other):
        """self @ other, exact."""
        if other.rows != self.cols:
            raise ValueError("shape mismatch")
        cols_of = {}
        for r, c, v in other.triples:
            cols_of.setdefault(c, []).append((r, v))
        rows_of = {}
        for r, c, v in self.triples:
            rows_of.setdefault(c, []).append((r, v))
        acc = {}
        for c2, col in cols_of.items():
            for mid, v2 in col:
                for r, v1 in rows_of.get(mid, ()):
                    key = (r, c2)
                    acc[key] = acc.get(key, 0) + v1 * v2
        return SparseMatrix.from_entries(self.rows, other.cols, acc)

    def is_zero(self):
        return not self.triples

    def permuted(self, row_perm, col_perm):
        return SparseMatrix.from_entries(
            self.rows, self.cols,
            {(row_perm[r], col_perm[c]): v for r, c, v in self.triples})


def _eliminate(rows, reduce_val, inv_val):
    """Generic sparse Gaussian elimination with Markowitz pivoting.

    `rows` maps row index to {col: value}; values live in a field with
    `reduce_val` normalizing products and `inv_val` inverting.  Returns
    the rank.  Deterministic: pivot minimizes fill-in estimate with ties
    broken by (col, row).
    """
    col_count = {}
    for r, row in rows.items():
        for c in row:
            col_count[c] = col_count.get(c, 0) + 1
    rank = 0
    while rows:
        best = None
        for r, row in rows.items():
            rl = len(row)
            for c, v in row.items():
                score = (rl - 1) * (col_count[c] - 1)
                cand = (score, c, r)
                if best is None or cand < best:
                    best = cand
        if best is None:
            break
        _, pc, pr = best
        prow = rows.pop(pr)
        for c in prow:
            col_count[c] -= 1
        rank += 1
        pinv = inv_val(prow[pc])
        prow = {c: reduce_val(v * pinv) for c, v in prow.items()}
        touched = [r for r, row in rows.items() if pc in row]
        for r in touched:
            row = rows[r]
            f = row.pop(pc)
            col_count[pc] -= 1
            for c, v in prow.items():
                if c == pc:
                    continue
                nv = reduce_val(row.get(c, 0) - f * v)
                if nv:
                    if c not in row:
                        col_count[c] = col_count.get(c, 0) + 1
                    row[c] = nv
                elif c in row:
                    del row[c]
                    col_count[c] -= 1
            if not row:
                del rows[r]
    return rank


def rank_mod_p(m, p):
    rows = {r: {c: v % p for c, v in row.items() if v % p}
            for r, row in m.row_major().items()}
    rows = {r: row for r, row in rows.items() if row}
    return _eliminate(rows, lambda v: v % p, lambda v: pow(v, -1, p))


def rank_exact(m):
    rows = {r: {c: Fraction(v) for c, v in row.items()}
            for r, row in m.row_major().items()}
    return _eliminate(rows, lambda v: v, lambda v: 1 / v)


def rank(m, mode=MODULAR, workers=1):
    """Rank of a sparse rational matrix.

    Exact mode eliminates over Q.  Modular mode computes the rank mod
    each prime (in parallel) and returns the maximum when the two
    largest agree, flagged probabilistic via `rank_info`.
    """
    return rank_info(m, mode, workers)[0]


def rank_info(m, mode=MODULAR, workers=1):
    """(rank, method) where method is "exact" or "modular"."""
    if not m.triples:
        return 0, "exact"
    if mode.kind == "exact":
        return rank_exact(m), "exact"
    ranks = sorted(parallel_map(lambda p: rank_mod_p(m, p),
                                list(mode.primes), workers))
    if ranks[-1] == ranks[-2]:
        return ranks[-1], "modular"
    if mode.exact_fallback:
        return rank_exact(m), "exact"
    raise RankDisagreement(
        f"modular ranks {ranks} disagree; rerun with exact mode")
