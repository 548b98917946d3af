"""The fourth root of unity zeta' attached to the cuspidal block of Sp_2n and SO_2n.

Three independent routes are provided:

* ``zeta_prime``: the closed formula in n, p, a;
* ``block_sum``: the sum over the block, assembled once term by term from the
  symbol enumeration (each term using the formula on the smaller group
  Sp_2m) and once from the parity count;
* ``eliminate_candidates``: try all four roots and keep the ones compatible
  with the divisibility of the block sum by the component group order.

Reductions modulo 4 only ever touch integer powers of p.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .classical import component_group_order, cuspidal_k, cuspidal_pair_exists, normalize_family
from .quartic import (
    ALL_ROOTS,
    MINUS_J,
    MINUS_ONE,
    ONE,
    QuarticElem,
    RootOfUnity4,
    require_odd_prime,
    divides,
    eps_of,
    p_term,
)
from .symbols import enumerate_block

ZETA_FAMILIES = ("Sp", "SO")


@dataclass(frozen=True)
class ZetaQuery:
    """A cuspidal block of Sp_2n or SO_2n over F_q, q = p^a."""

    family: str
    n: int
    p: int
    a: int
    k: int = field(init=False)

    def __post_init__(self) -> None:
        fam = normalize_family(self.family)
        if fam not in ZETA_FAMILIES:
            raise ValueError(f"zeta' is tabulated for {ZETA_FAMILIES}, not {fam}")
        object.__setattr__(self, "family", fam)
        require_odd_prime(self.p)
        if self.a < 1:
            raise ValueError("a must be at least 1")
        k = cuspidal_k(fam, self.n)
        if k is None:
            raise ValueError(f"{fam} with n = {self.n} has no cuspidal pair")
        object.__setattr__(self, "k", k)

    @property
    def eps(self) -> int:
        return eps_of(self.p)

    @property
    def a_order(self) -> int:
        return component_group_order(self.family, cuspidal_pair_exists(self.family, self.n))

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n, "k": self.k, "p": self.p, "a": self.a}

    @classmethod
    def from_json(cls, d: dict) -> ZetaQuery:
        q = cls(d["family"], d["n"], d["p"], d["a"])
        if "k" in d and d["k"] != q.k:
            raise ValueError("stored k disagrees with n")
        return q


def zeta_base_sl2(p: int, a: int) -> RootOfUnity4:
    """zeta' for the cuspidal pair of SL_2(p^a)."""
    require_odd_prime(p)
    if a < 1:
        raise ValueError("a must be at least 1")
    return (MINUS_ONE if p % 4 == 1 else MINUS_J) ** a


def eta(p: int, a: int) -> RootOfUnity4:
    """eta^a with eta = -1 for p = 1 mod 4 and -j for p = 3 mod 4, so eta^2 = eps."""
    require_odd_prime(p)
    base = MINUS_ONE if eps_of(p) == 1 else MINUS_J
    assert base**2 == RootOfUnity4.sign(eps_of(p))
    return base**a


def _formula(n: int, p: int, a: int) -> RootOfUnity4:
    eps = eps_of(p)
    if n % 2 == 0:
        return RootOfUnity4.sign(eps) ** (a * n // 2)
    return (MINUS_ONE if eps == 1 else MINUS_J) ** (a * n)


def zeta_prime(query: ZetaQuery) -> RootOfUnity4:
    return _formula(query.n, query.p, query.a)


def _levi_zeta(m: int, p: int, a: int) -> RootOfUnity4:
    # zeta' of the Levi factor Sp_2m; a torus when m = 0
    if m == 0:
        return ONE
    return zeta_prime(ZetaQuery("Sp", m, p, a))


@dataclass(frozen=True)
class BlockSum:
    """zeta'_{i0} p^(an/2) + sum over the rest of the block, with q^dim(B_u) factored out.

    ``terms`` pairs each root with its half-exponent of p (a * m for Sp
    symbols); the cuspidal term comes first.  ``total`` is the exact sum,
    ``reduced`` the same with integer p-powers replaced by eps-powers and
    ``closed_form`` the parity-count expression (``None`` for SO, where the
    sum is only known in reduced form).
    """

    query: ZetaQuery
    candidate: RootOfUnity4
    terms: tuple[tuple[RootOfUnity4, int], ...]
    levi_ranks: tuple[int, ...]
    total: QuarticElem
    reduced: QuarticElem
    closed_form: QuarticElem | None

    def to_json(self) -> dict:
        return {
            "candidate": str(self.candidate),
            "terms": [
                {"zeta": str(r), "half_exp": h, "m": m}
                for (r, h), m in zip(self.terms, self.levi_ranks)
            ],
            "total": str(self.total),
            "reduced": str(self.reduced),
        }


def closed_form(query: ZetaQuery, candidate: RootOfUnity4, reduce: bool = False) -> QuarticElem:
    """candidate p^(an/2) + c + d eta^a p^(a/2) with (c, d) from the parity count."""
    if query.family != "Sp":
        raise ValueError("the parity-count form applies to Sp blocks")
    half = 2 ** (query.k - 1)
    c, d = (half - 1, half) if query.n % 2 == 0 else (half, half - 1)
    p, a = query.p, query.a
    return (
        p_term(candidate, p, a * query.n, reduce)
        + c
        + p_term(eta(p, a), p, a, reduce) * d
    )


def block_sum(query: ZetaQuery, candidate: RootOfUnity4) -> BlockSum:
    p, a = query.p, query.a
    if query.family == "SO":
        terms = ((candidate, a * query.n), (MINUS_ONE, 0))
        total = p_term(candidate, p, a * query.n) - 1
        reduced = p_term(candidate, p, a * query.n, reduce=True) - 1
        return BlockSum(query, candidate, terms, (query.n, 0), total, reduced, None)

    block = enumerate_block(query.k)
    if len(block) != 2**query.k or query.a_order != len(block):
        raise AssertionError("block size disagrees with the component group order")
    cusp = [r for r in block if r.m == query.n]
    if len(cusp) != 1:
        raise AssertionError("the cuspidal symbol is not unique in its block")
    rest = [r for r in block if r is not cusp[0]]
    ranks = (query.n,) + tuple(r.m for r in rest)
    roots = (candidate,) + tuple(_levi_zeta(m, p, a) for m in ranks[1:])
    terms = tuple((z, a * m) for z, m in zip(roots, ranks))
    total = QuarticElem.of(p)
    reduced = QuarticElem.of(p)
    for z, h in terms:
        total = total + p_term(z, p, h)
        reduced = reduced + p_term(z, p, h, reduce=True)

    closed = closed_form(query, candidate)
    if reduced != closed_form(query, candidate, reduce=True):
        raise AssertionError(
            f"term-by-term block sum {reduced} differs from the parity-count form "
            f"{closed_form(query, candidate, reduce=True)} for {query}"
        )
    if not divides(4, total - closed):
        raise AssertionError("exact block sum is not congruent to the parity-count form mod 4")
    return BlockSum(query, candidate, terms, ranks, total, reduced, closed)


@dataclass(frozen=True)
class CandidateTest:
    candidate: RootOfUnity4
    modulus: int
    square_ok: bool
    trace_ok: bool
    norm_ok: bool
    base_ok: bool

    @property
    def survives(self) -> bool:
        return self.square_ok and self.trace_ok and self.norm_ok and self.base_ok

    def to_json(self) -> dict:
        return {
            "candidate": str(self.candidate),
            "modulus": self.modulus,
            "square": self.square_ok,
            "trace": self.trace_ok,
            "norm": self.norm_ok,
            "base": self.base_ok,
            "survives": self.survives,
        }


def _split(bs: BlockSum) -> tuple[QuarticElem, QuarticElem]:
    """(leading term, remainder) of the exact block sum."""
    q = bs.query
    lead = p_term(bs.candidate, q.p, q.a * q.n)
    return lead, bs.total - lead


def _square_test(bs: BlockSum, modulus: int) -> bool:
    # (lead + rest)(lead - rest) = lead^2 - rest^2 is divisible whenever the
    # block sum is; the sqrt(p) part must vanish mod the modulus before the
    # Z[j] part can be tested coefficientwise.
    lead, rest = _split(bs)
    prod = lead * lead - rest * rest
    beta = prod.irrational
    if beta[0] % modulus or beta[1] % modulus:
        return False
    alpha = prod.rational
    return alpha[0] % modulus == 0 and alpha[1] % modulus == 0


def _trace_norm(x: QuarticElem, d: int) -> tuple[bool, bool]:
    """Integrality of the trace and norm of x/d over Q(j).

    Both hold exactly when d divides x; a failing norm test is the
    "2 divides p^a" contradiction.
    """
    alpha, beta = x.rational, x.irrational
    trace_ok = (2 * alpha[0]) % d == 0 and (2 * alpha[1]) % d == 0
    a2 = (alpha[0] ** 2 - alpha[1] ** 2, 2 * alpha[0] * alpha[1])
    b2 = (beta[0] ** 2 - beta[1] ** 2, 2 * beta[0] * beta[1])
    norm = (a2[0] - x.p * b2[0], a2[1] - x.p * b2[1])
    norm_ok = norm[0] % (d * d) == 0 and norm[1] % (d * d) == 0
    assert (trace_ok and norm_ok) == divides(d, x)
    return trace_ok, norm_ok


def _base_value(query: ZetaQuery) -> RootOfUnity4 | None:
    # Where the component group has order 2, divisibility alone cannot pin
    # down the root; the SL_2 value fixes it (squared on SO_4 = SL_2 x SL_2 / mu_2).
    if query.family == "Sp" and query.n == 1:
        return zeta_base_sl2(query.p, query.a)
    if query.family == "SO" and query.n == 2:
        return zeta_base_sl2(query.p, query.a) ** 2
    return None


def candidate_tests(query: ZetaQuery) -> list[CandidateTest]:
    modulus = min(4, query.a_order)
    base = _base_value(query)
    out = []
    for z in ALL_ROOTS:
        bs = block_sum(query, z)
        trace_ok, norm_ok = _trace_norm(bs.reduced, modulus)
        out.append(
            CandidateTest(
                candidate=z,
                modulus=modulus,
                square_ok=_square_test(bs, modulus),
                trace_ok=trace_ok,
                norm_ok=norm_ok,
                base_ok=base is None or z == base,
            )
        )
    return out


def eliminate_candidates(query: ZetaQuery) -> list[RootOfUnity4]:
    """The roots of unity that pass every necessary condition, in j-exponent order."""
    tests = sorted(candidate_tests(query), key=lambda t: t.candidate.e)
    survivors = [t.candidate for t in tests if t.survives]
    if not survivors:
        raise AssertionError(f"no candidate survives for {query}")
    return survivors


@dataclass(frozen=True)
class DivisibilityReport:
    query: ZetaQuery
    zeta: RootOfUnity4
    survivors: tuple[RootOfUnity4, ...]
    tests: tuple[CandidateTest, ...]
    block: BlockSum
    full_order_divides: bool
    b_offsets: tuple[Fraction, ...]

    @property
    def passed(self) -> bool:
        chosen = [t for t in self.tests if t.candidate == self.zeta]
        return self.survivors == (self.zeta,) and chosen[0].survives

    def to_json(self) -> dict:
        terms = [
            {"zeta": str(r), "m": m, "half_exp": h, "b_offset": str(b)}
            for (r, h), m, b in zip(self.block.terms, self.block.levi_ranks, self.b_offsets)
        ]
        return {
            **self.query.to_json(),
            "zeta_prime": str(self.zeta),
            "survivors": [str(s) for s in self.survivors],
            "terms": terms,
            "tests": [t.to_json() for t in self.tests],
            "full_order_divides": self.full_order_divides,
            "pass": self.passed,
        }


def divisibility_report(query: ZetaQuery) -> DivisibilityReport:
    """Audit the formula value against the block-sum congruences.

    ``full_order_divides`` records whether the whole component group order
    (not just 4) divides the exact block sum; it is informational only.
    """
    z = zeta_prime(query)
    tests = tuple(candidate_tests(query))
    survivors = tuple(t.candidate for t in sorted(tests, key=lambda t: t.candidate.e) if t.survives)
    bs = block_sum(query, z)
    offsets = tuple(Fraction(m, 2) for m in bs.levi_ranks)
    return DivisibilityReport(
        query=query,
        zeta=z,
        survivors=survivors,
        tests=tests,
        block=bs,
        full_order_divides=divides(query.a_order, bs.total),
        b_offsets=offsets,
    )
