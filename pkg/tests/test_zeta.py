import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import odd_primes
from unipotent_atlas.quartic import (
    ALL_ROOTS,
    J,
    MINUS_J,
    MINUS_ONE,
    ONE,
    QuarticElem,
    divides,
    half_power,
)
from unipotent_atlas.zeta import (
    ZetaQuery,
    block_sum,
    candidate_tests,
    closed_form,
    divisibility_report,
    eliminate_candidates,
    eta,
    zeta_base_sl2,
    zeta_prime,
)

PRIMES = odd_primes(100)


def test_base_examples():
    assert zeta_base_sl2(5, 1) == MINUS_ONE
    assert zeta_base_sl2(3, 1) == MINUS_J
    assert zeta_base_sl2(3, 2) == MINUS_ONE


def test_formula_examples():
    assert zeta_prime(ZetaQuery("Sp", 1, 5, 1)) == MINUS_ONE
    assert zeta_prime(ZetaQuery("Sp", 3, 3, 1)) == J
    assert zeta_prime(ZetaQuery("SO", 2, 7, 2)) == ONE


def test_eta_examples():
    assert eta(5, 1) == MINUS_ONE
    assert eta(7, 1) == MINUS_J
    assert eta(7, 4) == ONE


@given(st.sampled_from(PRIMES), st.integers(1, 8))
def test_eta_squares_to_eps(p, a):
    assert eta(p, a) ** 2 == (ONE if p % 4 == 1 or a % 2 == 0 else MINUS_ONE)


def test_query_validation():
    q = ZetaQuery("sp", 6, 5, 1)
    assert (q.family, q.k, q.a_order) == ("Sp", 3, 8)
    assert ZetaQuery("SO", 8, 7, 1).a_order == 8
    assert ZetaQuery.from_json(q.to_json()) == q
    for bad in [("Sp", 4, 3, 1), ("SO", 3, 3, 1), ("Sp", 3, 9, 1), ("Sp", 3, 2, 1),
                ("Sp", 3, 3, 0), ("Spin", 2, 3, 1)]:
        with pytest.raises(ValueError):
            ZetaQuery(*bad)


@pytest.mark.parametrize("p,a", list(itertools.product([3, 5, 7], [1, 2, 3])))
def test_sp6_block_sum(p, a):
    q = ZetaQuery("Sp", 3, p, a)
    for z in ALL_ROOTS:
        bs = block_sum(q, z)
        expect = (z.elem(p) * half_power(p, 3 * a)) + 2 + eta(p, a).elem(p) * half_power(p, a)
        assert bs.total == expect
        assert len(bs.terms) == 4 and bs.terms[0] == (z, 3 * a)


def test_sp12_closed_form():
    q = ZetaQuery("Sp", 6, 5, 1)
    cf = closed_form(q, ONE)
    assert cf == half_power(5, 6) + 3 + MINUS_ONE.elem(5) * half_power(5, 1) * 4


def test_so4_block_sum():
    bs = block_sum(ZetaQuery("SO", 2, 5, 1), ONE)
    assert bs.total == QuarticElem.of(5, 4)
    assert divides(4, bs.total)
    assert bs.closed_form is None


def test_m_zero_terms_are_one():
    for k in range(1, 5):
        n = k * (k + 1) // 2
        bs = block_sum(ZetaQuery("Sp", n, 3, 1), J)
        assert all(r == ONE for (r, _), m in zip(bs.terms, bs.levi_ranks) if m == 0)


def test_elimination_examples():
    assert eliminate_candidates(ZetaQuery("Sp", 3, 3, 1)) == [J]
    assert eliminate_candidates(ZetaQuery("SO", 2, 5, 1)) == [ONE]
    assert eliminate_candidates(ZetaQuery("Sp", 1, 5, 2)) == [ONE]


def test_sp2_needs_the_base_case():
    # divisibility by |A| = 2 alone leaves a pair of roots
    tests = candidate_tests(ZetaQuery("Sp", 1, 5, 1))
    arithmetic = [t.candidate for t in tests if t.square_ok and t.trace_ok and t.norm_ok]
    assert sorted(r.e for r in arithmetic) == [0, 2]
    tests = candidate_tests(ZetaQuery("Sp", 1, 3, 1))
    arithmetic = [t.candidate for t in tests if t.square_ok and t.trace_ok and t.norm_ok]
    assert sorted(r.e for r in arithmetic) == [1, 3]


def test_wrong_sign_fails_norm_test():
    # zeta = -eps^(ax) eta^a leaves 2 eta^a p^(a/2), and 4 does not divide it
    tests = {t.candidate: t for t in candidate_tests(ZetaQuery("Sp", 3, 7, 1))}
    assert tests[J].survives
    assert tests[MINUS_J].square_ok and not tests[MINUS_J].norm_ok


@pytest.mark.parametrize(
    "family,n", [("Sp", 1), ("Sp", 3), ("Sp", 6), ("Sp", 10), ("SO", 2), ("SO", 8)]
)
@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17])
def test_unique_survivor(family, n, p):
    for a in range(1, 5):
        q = ZetaQuery(family, n, p, a)
        assert eliminate_candidates(q) == [zeta_prime(q)]


@pytest.mark.parametrize("q", [("Sp", 3, 3, 1), ("Sp", 6, 5, 1), ("SO", 8, 7, 2)])
def test_divisibility_report_passes(q):
    rep = divisibility_report(ZetaQuery(*q))
    assert rep.passed
    js = rep.to_json()
    assert js["pass"] and js["survivors"] == [js["zeta_prime"]]
    assert len(js["terms"]) == (2 ** ZetaQuery(*q).k if q[0] == "Sp" else 2)


def test_so8_formula():
    assert divisibility_report(ZetaQuery("SO", 8, 7, 2)).zeta == ONE
    assert zeta_prime(ZetaQuery("SO", 8, 7, 1)) == ONE


@given(st.sampled_from(PRIMES), st.integers(1, 6))
def test_base_case_consistency(p, a):
    base = zeta_base_sl2(p, a)
    assert zeta_prime(ZetaQuery("Sp", 1, p, a)) == base
    assert zeta_prime(ZetaQuery("SO", 2, p, a)) == base**2


@given(st.sampled_from([3, 5, 7, 11, 13]), st.integers(1, 4), st.integers(1, 5))
def test_whole_order_divides_the_block_sum(p, a, k):
    # informational in the report; holds on every query tried
    q = ZetaQuery("Sp", k * (k + 1) // 2, p, a)
    assert divisibility_report(q).full_order_divides
