from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from unipotent_atlas.classical import (
    ClassRecord,
    centralizer_dimension,
    component_group_order,
    cuspidal_pair_exists,
    dominates,
    enumerate_classes,
    group_dimension,
    make_record,
    orbit_dimensions,
    partitions,
    transpose,
    validate_partition,
)


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_validity():
    assert validate_partition("SO", (1, 3))
    assert not validate_partition("SO", (2, 1, 1))
    assert validate_partition("Sp", (2, 4))
    assert not validate_partition("Sp", (3, 1))
    assert validate_partition("Sp", (3, 3))
    assert validate_partition("spin", (2, 2, 1))
    with pytest.raises(ValueError):
        validate_partition("G2", (1,))


def test_component_group_orders():
    assert component_group_order("Sp", (2, 4)) == 4
    assert component_group_order("SO", (1, 3, 5, 7)) == 8
    assert component_group_order("Sp", (1, 1)) == 1
    assert component_group_order("Spin", (1, 3, 5, 7)) == 16
    assert component_group_order("Spin", (3, 3, 1)) == 2
    assert component_group_order("Spin", (2, 2)) == 1
    with pytest.raises(ValueError):
        component_group_order("SO", (2, 1))


def test_cuspidal_pairs():
    assert cuspidal_pair_exists("Sp", 3) == (4, 2)
    assert cuspidal_pair_exists("Sp", 4) is None
    assert cuspidal_pair_exists("SO", 2) == (3, 1)
    assert cuspidal_pair_exists("SO", 8) == (7, 5, 3, 1)
    assert cuspidal_pair_exists("Sp", 0) is None


def test_dimension_examples():
    assert orbit_dimensions("Sp", (2,)) == (2, 0)
    assert orbit_dimensions("Sp", (1, 1)) == (0, 1)
    assert orbit_dimensions("Sp", (2, 2))[0] == 6
    assert centralizer_dimension("Sp", (2, 2)) == 4
    assert group_dimension("Sp", 6) == (21, 3)
    assert group_dimension("SO", 8) == (28, 4)


def test_regular_and_subregular_orbits():
    # regular orbit dimension is dim G - rank; the trivial class has the full flag variety
    for fam, total in (("Sp", 8), ("SO", 7), ("SO", 9)):
        dim, rank = group_dimension(fam, total)
        reg = (total,) if fam == "Sp" or total % 2 else (total - 1, 1)
        assert orbit_dimensions(fam, reg) == (dim - rank, 0)
        assert orbit_dimensions(fam, (1,) * total) == (0, (dim - rank) // 2)


def test_enumeration_examples():
    sp2 = enumerate_classes("Sp", 2)
    assert len(sp2) == 4
    assert sorted(r.dim_orbit for r in sp2) == [0, 4, 6, 8]
    assert len(enumerate_classes("Sp", 1)) == 2
    so3 = enumerate_classes("SO", 3)
    assert [r.partition for r in so3] == [(1, 1, 1), (3,)]
    with pytest.raises(ValueError):
        enumerate_classes("SO", 0)
    with pytest.raises(ValueError):
        enumerate_classes("Sp", 13)


def test_enumeration_order_is_stable():
    recs = enumerate_classes("SO", 10)
    keys = [(r.dim_orbit, r.partition) for r in recs]
    assert keys == sorted(keys)
    assert recs == enumerate_classes("SO", 10)


def test_cuspidal_flag():
    flagged = [r.partition for r in enumerate_classes("Sp", 3) if r.cuspidal]
    assert flagged == [(4, 2)]
    assert [r.partition for r in enumerate_classes("SO", 4) if r.cuspidal] == [(3, 1)]


def test_record_round_trip():
    rec = make_record("Sp", (4, 2))
    assert ClassRecord.from_json(rec.to_json()) == rec
    assert rec.tsv_row() == "4,2\t4\t16\t1\t1"


@pytest.mark.parametrize("family", ["Sp", "SO"])
@pytest.mark.parametrize("n", range(1, 7))
def test_dimensions_are_consistent(family, n):
    for rec in enumerate_classes(family, n):
        assert rec.dim_orbit % 2 == 0 and rec.dim_springer_fiber >= 0
        total = sum(rec.partition)
        dim, rank = group_dimension(family, total)
        if rec.dim_springer_fiber == 0:
            assert rec.dim_orbit == dim - rank


@pytest.mark.parametrize("family", ["Sp", "SO"])
@pytest.mark.parametrize("n", range(1, 7))
def test_dominance_monotonicity(family, n):
    recs = enumerate_classes(family, n)
    for a, b in combinations(recs, 2):
        if dominates(a.partition, b.partition):
            assert a.dim_orbit >= b.dim_orbit
        if dominates(b.partition, a.partition):
            assert b.dim_orbit >= a.dim_orbit


def test_single_regular_orbit_for_so_even():
    # the open orbit of SO_2n is the unique one with zero fibre
    recs = enumerate_classes("SO", 8)
    assert [r.partition for r in recs if r.dim_springer_fiber == 0] == [(7, 1)]


@given(st.integers(1, 14))
def test_transpose_is_an_involution(n):
    for lam in partitions(n):
        assert transpose(transpose(lam)) == lam
        assert sum(transpose(lam)) == n


@given(st.integers(1, 12))
def test_sp_partitions_have_paired_odd_parts(n):
    for rec in enumerate_classes("Sp", n):
        counts = Counter(rec.partition)
        assert all(m % 2 == 0 for a, m in counts.items() if a % 2)
