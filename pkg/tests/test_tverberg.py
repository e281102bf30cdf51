import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tverlab.constraints import sample_configuration
from tverlab.errors import Degenerate
from tverlab.geometry import PointConfiguration
from tverlab.rng import SplitMix64
from tverlab.tverberg import (
    BirchInstance,
    birch_general_position,
    birch_records,
    counting_report,
    is_prime_power,
    is_tverberg,
    tverberg_records,
    tverberg_records_oracle,
)

RADON = PointConfiguration(1, 2, ((0,), (1,), (2,)))


def test_radon_middle_partition():
    record = is_tverberg(((0, 2), (1,)), RADON)
    assert record is not None
    assert record.ptype == "I"
    assert record.point == (1,)


def test_radon_wrong_partition_absent():
    assert is_tverberg(((0,), (1, 2)), RADON) is None


def test_type_one_planar_example():
    config = PointConfiguration(
        2, 3, ((0, 0), (4, 0), (2, 4), (2, 1), (1, 3), (3, 3), (2, 2))
    )
    record = is_tverberg(((0, 1, 2), (3, 4, 5), (6,)), config)
    assert record is not None
    assert record.ptype == "I"
    assert record.point == (2, 2)


def test_radon_records_count():
    records = tverberg_records(RADON)
    assert len(records) == 1
    assert records[0].partition == ((0, 2), (1,))


def test_degenerate_refused():
    config = PointConfiguration(1, 2, ((0,), (1,), (1,)))
    with pytest.raises(Degenerate):
        tverberg_records(config)


def test_d1_q3_even_count():
    config = PointConfiguration(1, 3, ((0,), (1,), (2,), (3,), (4,)))
    records = tverberg_records(config)
    assert len(records) % 2 == 0
    assert len(records) >= 2


@pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
def test_oracle_equivalence_d2_q3(seed):
    config, records = _sample(2, 3, seed)
    assert [r.partition for r in records] == tverberg_records_oracle(config)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_oracle_equivalence_d1_q3(seed):
    config, records = _sample(1, 3, seed)
    assert [r.partition for r in records] == tverberg_records_oracle(config)


def _sample(d, q, seed):
    rng = SplitMix64(seed)
    while True:
        config = sample_configuration(d, q, rng, coord_bound=1000)
        try:
            return config, tverberg_records(config)
        except Degenerate:
            continue


def test_records_reverified_inside():
    from tverlab.geometry import INSIDE, hull_membership

    config, records = _sample(2, 3, 9)
    for record in records:
        for block in record.partition:
            pts = [config.points[i] for i in block]
            assert hull_membership(record.point, pts) == INSIDE


def test_counting_report_d1_q3():
    config, records = _sample(1, 3, 11)
    report = counting_report(config, records=records)
    assert report["checks"]["evenness"]["applies"]
    assert report["ok"]
    assert report["T"] == len(records)


def test_counting_report_d2_q3():
    config, records = _sample(2, 3, 12)
    report = counting_report(config, records=records)
    assert not report["checks"]["evenness"]["applies"]  # q = d+1
    assert report["checks"]["sierksma"]["bound"] == 4
    assert report["T"] >= 4
    assert report["ok"]


@given(st.permutations(range(7)))
@settings(max_examples=25, deadline=None)
def test_relabeling_permutes_records(perm):
    config, records = _sample(2, 3, 13)
    relabeled = PointConfiguration(
        2, 3, tuple(config.points[perm[i]] for i in range(7))
    )
    inverse = {perm[i]: i for i in range(7)}
    try:
        records2 = tverberg_records(relabeled)
    except Degenerate:
        pytest.skip("relabeling cannot introduce degeneracy")
    assert len(records2) == len(records)
    mapped = {
        tuple(sorted(tuple(sorted(inverse[i] for i in b)) for b in r.partition))
        for r in records
    }
    got = {tuple(sorted(r.partition)) for r in records2}
    assert got == mapped


def test_birch_two_pairings():
    instance = BirchInstance(1, 2, ((-2,), (-1,), (1,), (2,)), (0,))
    parts = birch_records(instance)
    assert len(parts) == 2
    assert ((0, 2), (1, 3)) in parts
    assert ((0, 3), (1, 2)) in parts


def test_birch_outside_hull():
    instance = BirchInstance(1, 2, ((1,), (2,), (3,), (4,)), (0,))
    assert birch_records(instance) == []


def test_birch_general_position_gate():
    instance = BirchInstance(1, 2, ((0,), (1,), (2,), (3,)), (0,))
    assert not birch_general_position(instance)  # a point equals p


@pytest.mark.parametrize("d,k", [(1, 2), (1, 3), (2, 2)])
def test_birch_counts_even_and_bounded(d, k):
    rng = SplitMix64(17)
    for _ in range(10):
        while True:
            pts = tuple(
                tuple(rng.randint(-1000, 1000) for _ in range(d))
                for _ in range(k * (d + 1))
            )
            instance = BirchInstance(d, k, pts, tuple([0] * d))
            if birch_general_position(instance):
                break
        count = len(birch_records(instance))
        assert count % 2 == 0
        assert count == 0 or count >= math.factorial(k)


def test_is_prime_power():
    assert all(is_prime_power(q) for q in (2, 3, 4, 5, 7, 8, 9, 16, 27))
    assert not any(is_prime_power(q) for q in (1, 6, 10, 12, 15))
