"""Разбиения и конденсация по диагоналям с вычетом r (mod p)."""

from __future__ import annotations

import random

import pytest

from kac_crystals.core.errors import BadResidue
from kac_crystals.typea.partitions import (
    Partition,
    WedgeFactor,
    partitions_in_box,
    residue_class,
    residue_condense,
)

SEVEN_PARTS = Partition((7, 5, 1, 1, 1, 1, 1))


def random_partition(rng: random.Random, max_part: int, max_len: int) -> Partition:
    parts = sorted((rng.randint(1, max_part) for _ in range(rng.randint(0, max_len))), reverse=True)
    return Partition(tuple(parts))


def test_parse_forms():
    assert Partition.parse("7,5,1^5") == SEVEN_PARTS
    assert Partition.parse("7, 5, 1, 1, 1, 1, 1") == SEVEN_PARTS
    assert Partition.parse("") == Partition(())
    assert Partition.parse("0") == Partition(())
    assert SEVEN_PARTS.size == 17
    assert len(SEVEN_PARTS) == 7
    assert str(Partition(())) == "∅"


@pytest.mark.parametrize("parts", [(1, 2), (3, 0), (-1,)])
def test_invalid_partitions(parts):
    with pytest.raises(ValueError):
        Partition(parts)


def test_diagonal_depth():
    assert SEVEN_PARTS.diagonal_depth(0) == 2
    assert SEVEN_PARTS.diagonal_depth(3) == 2
    assert SEVEN_PARTS.diagonal_depth(-6) == 1
    assert SEVEN_PARTS.diagonal_depth(9) == 0


def test_condense_seven_parts():
    profile = residue_condense(SEVEN_PARTS, 3, 0)
    assert profile.marked_boxes == ((9, 0), (7, 1), (5, 2), (2, 2), (1, 4), (1, 7), (0, 9))
    assert profile.m == (2, 3, 2, 0, 1, 1)
    assert profile.nontrivial_factors == (
        WedgeFactor(2, 3), WedgeFactor(2, 3), WedgeFactor(1, 3), WedgeFactor(1, 3),
    )
    assert profile.factors_text() == "⋀^2𝕂^3 ⊗ ⋀^2𝕂^3 ⊗ 𝕂^3 ⊗ 𝕂^3"
    assert profile.dimension == 81
    data = profile.to_json()
    assert data["marked_boxes"][0] == [9, 0]
    assert data["dimension"] == 81


def test_seven_parts_class_size_matches_dimension():
    assert len(residue_class(SEVEN_PARTS, 3, 0)) == 81


def test_empty_partition():
    profile = residue_condense(Partition(()), 3, 0)
    assert profile.marked_boxes == ((0, 0),)
    assert profile.m == ()
    assert profile.dimension == 1
    assert profile.factors_text() == "𝕂"
    assert residue_class(Partition(()), 3, 0) == [Partition(())]


def test_empty_partition_off_residue():
    # r ≠ 0: граничные диагонали -2 и 1 уже не совпадают
    profile = residue_condense(Partition(()), 3, 1)
    assert profile.marked_boxes == ((1, 0), (0, 2))
    assert profile.m == (2,)
    assert len(residue_class(Partition(()), 3, 1)) == profile.dimension == 3


@pytest.mark.parametrize("p, r", [(1, 0), (0, 0), (3, 3), (3, -1)])
def test_bad_residue(p, r):
    with pytest.raises(BadResidue):
        residue_condense(SEVEN_PARTS, p, r)
    with pytest.raises(BadResidue):
        residue_class(SEVEN_PARTS, p, r)


def test_profile_invariants_on_random_partitions():
    rng = random.Random(11)
    for _ in range(500):
        partition = random_partition(rng, 20, 12)
        p = rng.randint(2, 7)
        r = rng.randrange(p)
        profile = residue_condense(partition, p, r)
        first, last = profile.marked_boxes[-1], profile.marked_boxes[0]
        assert first[0] == 0
        assert last[1] == 0
        assert all(0 <= m <= p for m in profile.m)
        boxes = partition.residue_boxes(p, r)
        assert all((x - y) % p == r for x, y in profile.marked_boxes)
        assert all((x - 1, y - 1) in boxes for x, y in profile.marked_boxes if x and y)


def test_class_size_equals_tensor_dimension():
    rng = random.Random(5)
    for _ in range(40):
        partition = random_partition(rng, 5, 5)
        p = rng.randint(2, 4)
        r = rng.randrange(p)
        profile = residue_condense(partition, p, r)
        members = residue_class(partition, p, r)
        assert partition in members
        assert len(members) == profile.dimension, (partition, p, r)


def test_partitions_in_box_counts():
    assert len(list(partitions_in_box(2, 2))) == 6
    assert len(list(partitions_in_box(3, 3))) == 20
    assert all(len(mu) <= 3 and mu.first <= 4 for mu in partitions_in_box(3, 4))
