"""Symbols of the block of the cuspidal pair of Sp_2n, n = k(k+1)/2.

For k even the block is parameterized by B ranging over subsets of
{2, 4, ..., 2d0-2} with A the complement in {0, 2, ..., 2d0-2}, d0 = k+1.
For k odd, A ranges over subsets of {1, 3, ..., 2k-1} and B is the
complement, d0 = -k.  The defect d = |A| - |B| determines
k_inv = d-1 (d >= 1) or -d (d <= -1), and m = k_inv(k_inv+1)/2 is the
semisimple rank of the Levi factor carrying the cuspidal support.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .classical import ClassRecord, cuspidal_pair_exists, make_record

MAX_K = 12


@dataclass(frozen=True)
class SpringerSymbol:
    A: frozenset[int]
    B: frozenset[int]

    @property
    def defect(self) -> int:
        return len(self.A) - len(self.B)

    def sorted_pair(self) -> tuple[list[int], list[int]]:
        return sorted(self.A), sorted(self.B)


def k_invariant(defect: int) -> int:
    if defect % 2 == 0:
        raise ValueError("block symbols have odd defect")
    return defect - 1 if defect >= 1 else -defect


def levi_rank(k_inv: int) -> int:
    return k_inv * (k_inv + 1) // 2


@dataclass(frozen=True)
class SymbolRecord:
    symbol: SpringerSymbol
    d: int
    k_inv: int
    m: int

    @property
    def b_offset(self) -> Fraction:
        return Fraction(self.m, 2)

    @property
    def delta(self) -> int:
        """(-1)^m, the sign attached to the Levi rank."""
        return -1 if self.m % 2 else 1

    def to_json(self) -> dict:
        a, b = self.symbol.sorted_pair()
        return {"A": a, "B": b, "defect": self.d, "k_inv": self.k_inv, "m": self.m}

    @classmethod
    def from_json(cls, d: dict) -> SymbolRecord:
        rec = make_symbol_record(SpringerSymbol(frozenset(d["A"]), frozenset(d["B"])))
        if (rec.d, rec.k_inv, rec.m) != (d["defect"], d["k_inv"], d["m"]):
            raise ValueError("stored invariants disagree with the symbol")
        return rec


def make_symbol_record(sym: SpringerSymbol) -> SymbolRecord:
    d = sym.defect
    ki = k_invariant(d)
    return SymbolRecord(sym, d, ki, levi_rank(ki))


def _check_k(k: int) -> None:
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k = {k} out of range 1..{MAX_K}")


def block_defect_anchor(k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    d0 = -k if k % 2 else k + 1
    assert d0 % 2 and d0 * (d0 - 1) // 2 == k * (k + 1) // 2
    return d0


def ground_set(k: int) -> tuple[int, ...]:
    """{0, 2, ..., 2d0-2} for k even, {1, 3, ..., 2k-1} for k odd.

    The odd-k set is written with upper end 1-2(d0+1) = 2k-1, which has
    exactly k elements.
    """
    d0 = block_defect_anchor(k)
    if k % 2 == 0:
        return tuple(range(0, 2 * d0 - 1, 2))
    top = 1 - 2 * (d0 + 1)
    return tuple(range(1, top + 1, 2))


def cuspidal_symbol(k: int) -> SpringerSymbol:
    s = frozenset(ground_set(k))
    return SpringerSymbol(s, frozenset()) if k % 2 == 0 else SpringerSymbol(frozenset(), s)


def enumerate_block(k: int) -> list[SymbolRecord]:
    """All 2^k symbols of the block, ordered by subset size then lexicographically."""
    _check_k(k)
    ground = ground_set(k)
    free = ground[1:] if k % 2 == 0 else ground
    assert len(free) == k
    out = []
    for x in range(k + 1):
        for sub in itertools.combinations(free, x):
            sub = frozenset(sub)
            rest = frozenset(ground) - sub
            sym = SpringerSymbol(rest, sub) if k % 2 == 0 else SpringerSymbol(sub, rest)
            rec = make_symbol_record(sym)
            expect = k + 1 - 2 * x if k % 2 == 0 else 2 * x - k
            assert rec.d == expect, (sym, rec.d, expect)
            out.append(rec)
    d0 = block_defect_anchor(k)
    hits = [r for r in out if r.d == d0]
    assert len(hits) == 1 and hits[0].symbol == cuspidal_symbol(k)
    return out


def m_parity_rule(k_inv: int) -> int:
    """Parity of m from k_inv alone: y for k_inv = 2y, y+1 for k_inv = 2y+1."""
    if k_inv < 0:
        raise ValueError("k_inv is non-negative")
    y, r = divmod(k_inv, 2)
    return (y + r) % 2


def parity_counts(k: int) -> tuple[int, int]:
    """(#symbols with m even, #symbols with m odd), by enumeration."""
    recs = enumerate_block(k)
    odd = sum(r.m % 2 for r in recs)
    return len(recs) - odd, odd


def binomial_halving(k: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    even = sum(comb(k, x) for x in range(0, k + 1, 2))
    odd = sum(comb(k, x) for x in range(1, k + 1, 2))
    return even == odd == sum(comb(k - 1, z) for z in range(k)) == 2 ** (k - 1)


def cuspidal_class(k: int) -> ClassRecord:
    n = k * (k + 1) // 2
    return make_record("Sp", cuspidal_pair_exists("Sp", n))


def b_value(record: SymbolRecord, ambient: ClassRecord) -> Fraction:
    """b = dim B_u + m/2 on the cuspidal class of Sp_2n."""
    if ambient.family != "Sp" or not ambient.cuspidal:
        raise ValueError("ambient class must be the cuspidal class of Sp_2n")
    k = len(ambient.partition)
    if record not in enumerate_block(k):
        raise ValueError("symbol does not belong to this block")
    return ambient.dim_springer_fiber + record.b_offset
