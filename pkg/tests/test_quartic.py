import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unipotent_atlas.quartic import (
    ALL_ROOTS,
    J,
    MINUS_J,
    MINUS_ONE,
    ONE,
    QuarticElem,
    RootOfUnity4,
    divides,
    eps_of,
    expected_gauss,
    gauss_sum_complex,
    gauss_sum_numeric,
    GaussReport,
    half_power,
    is_prime,
    p_term,
    reduced_half_power,
    root_to_complex,
    sqrt_p_convention,
)

PRIMES = [3, 5, 7, 11, 13]
small = st.integers(-50, 50)


def elems(p):
    return st.builds(QuarticElem, small, small, small, small, st.just(p))


def test_roots_of_unity():
    assert J * J == MINUS_ONE
    assert MINUS_J**3 == J
    assert -ONE == MINUS_ONE
    assert J.inverse() == MINUS_J
    assert [str(r) for r in ALL_ROOTS] == ["1", "-1", "j", "-j"]
    assert RootOfUnity4.parse("-j") == MINUS_J
    with pytest.raises(ValueError):
        RootOfUnity4.parse("i")
    for r in ALL_ROOTS:
        assert cmath.isclose(root_to_complex(r) ** 4, 1)


def test_j_maps_to_i():
    assert root_to_complex(J) == pytest.approx(1j)
    assert QuarticElem.j(5).to_complex() == pytest.approx(1j)


def test_sqrt_squares_to_p():
    for p in PRIMES:
        s = QuarticElem.sqrt_p(p)
        assert s * s == QuarticElem.of(p, p)


@settings(max_examples=60)
@given(st.sampled_from(PRIMES).flatmap(lambda p: st.tuples(elems(p), elems(p), elems(p))))
def test_ring_axioms(xyz):
    x, y, z = xyz
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + (-x) == QuarticElem.of(x.p)
    assert (x * y).to_complex() == pytest.approx(x.to_complex() * y.to_complex(), rel=1e-9, abs=1e-6)


@given(st.sampled_from(PRIMES), st.integers(0, 12), st.integers(0, 12))
def test_half_power_is_additive(p, a, b):
    assert half_power(p, a) * half_power(p, b) == half_power(p, a + b)
    assert half_power(p, a).to_complex() == pytest.approx(math.sqrt(p) ** a)


@given(st.sampled_from(PRIMES), st.integers(0, 12))
def test_reduction_is_congruent_mod_4(p, a):
    assert divides(4, half_power(p, a) - reduced_half_power(p, a))


def test_reduced_half_power_values():
    # 7 = -1 mod 4: 7^(5/2) = 7^2 sqrt 7 -> sqrt 7
    assert reduced_half_power(7, 5) == QuarticElem.of(7, 0, 0, 1, 0)
    assert reduced_half_power(7, 2) == QuarticElem.of(7, -1)
    assert reduced_half_power(5, 6) == QuarticElem.of(5, 1)


def test_p_term():
    assert p_term(J, 3, 3) == QuarticElem.of(3, 0, 0, 0, 3)


def test_divisibility():
    assert divides(4, QuarticElem.of(3, 2, 0, 2, 0)) is False
    assert divides(2, QuarticElem.of(3, 2, 0, 2, 0))
    # (1 + sqrt 5)/2 is integral, so 2 divides 1 + sqrt 5 in the ring of integers
    assert divides(2, QuarticElem.of(5, 1, 0, 1, 0))
    assert not divides(2, QuarticElem.of(3, 1, 0, 1, 0))
    # 4 | 2 + 2j sqrt 3 since (1 + j sqrt 3)/2 is a root of t^2 - t + 1
    assert divides(4, QuarticElem.of(3, 2, 0, 0, 2))
    assert not divides(4, QuarticElem.of(3, 2, 0, 0, 0))
    with pytest.raises(ZeroDivisionError):
        divides(0, QuarticElem.of(3, 1))


@given(st.sampled_from(PRIMES).flatmap(elems), st.sampled_from([2, 3, 4, 8]))
def test_multiples_are_divisible(x, d):
    assert divides(d, x * d)


def test_mixed_prime_arithmetic_rejected():
    with pytest.raises(ValueError):
        QuarticElem.sqrt_p(3) + QuarticElem.sqrt_p(5)


def test_primes():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert eps_of(13) == 1 and eps_of(19) == -1
    with pytest.raises(ValueError):
        eps_of(9)


@pytest.mark.parametrize("p", [3, 5, 7, 13, 17, 19, 101, 199])
def test_first_gauss_sum(p):
    g = gauss_sum_complex(p)
    assert abs(abs(g) ** 2 - p) < 1e-9
    want = math.sqrt(p) if p % 4 == 1 else 1j * math.sqrt(p)
    assert g == pytest.approx(want, abs=1e-9)


@pytest.mark.parametrize("p,s", [(3, 2), (3, 3), (5, 2), (7, 2), (3, 8), (5, 3), (11, 2)])
def test_lifted_gauss_sums(p, s):
    g = gauss_sum_complex(p, s)
    assert abs(abs(g) ** 2 - p**s) < 1e-6 * p**s
    assert g == pytest.approx(expected_gauss(p, s), abs=1e-6 * math.sqrt(p**s))


def test_gauss_report_round_trip():
    rep = gauss_sum_numeric(7)
    assert rep.verdict == "imaginary-positive" and rep.matches_law
    assert GaussReport.from_json(rep.to_json()) == rep
    with pytest.raises(ValueError):
        gauss_sum_numeric(3, 9)


def test_sqrt_convention():
    c = sqrt_p_convention(7)
    assert c.positive_real and c.rule == "j^-1 G_1"
    assert sqrt_p_convention(13).rule == "G_1"
