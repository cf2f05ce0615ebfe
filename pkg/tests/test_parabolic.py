"""Метки параболической категории 𝒪 и биекция с тензорными кристаллами sl_m."""

from __future__ import annotations

import pytest

from kac_crystals.core.errors import BlockTooLarge
from kac_crystals.typea.parabolic import parabolic_bijection, parabolic_labels


@pytest.mark.parametrize(
    "m, blocks, count",
    [
        (3, (2, 2, 1, 1), 81),
        (2, (1, 1), 4),
        (3, (3,), 1),
        (3, (1, 1), 9),
        (4, (2,), 6),
        (4, (1, 3), 16),
        (2, (2, 1), 2),
    ],
)
def test_label_count(m, blocks, count):
    labels = parabolic_labels(m, blocks)
    assert labels.count == labels.expected_count == count


def test_blocks_strictly_decrease():
    labels = parabolic_labels(4, (3, 2))
    for label in labels.labels:
        assert [len(b) for b in label] == [3, 2]
        assert all(list(b) == sorted(b, reverse=True) and len(set(b)) == len(b) for b in label)
        assert all(1 <= x <= 4 for b in label for x in b)


def test_block_weight():
    labels = parabolic_labels(3, (1,))
    assert labels.block_weight((1,)) == (1, 0)
    assert labels.block_weight((2,)) == (-1, 1)
    assert labels.block_weight((3,)) == (0, -1)
    assert labels.block_weight((3, 2, 1)) == (0, 0)


@pytest.mark.parametrize("m, blocks", [(3, (2, 2, 1, 1)), (4, (2, 1)), (3, (3, 1))])
def test_bijection_preserves_weights(m, blocks):
    labels = parabolic_labels(m, blocks)
    tensor, mapping = parabolic_bijection(labels)
    assert len(tensor) == labels.count
    assert len(set(mapping.values())) == labels.count
    for label, image in mapping.items():
        assert tensor.weight(image).dynkin(tensor.cartan) == labels.label_weight(label)


@pytest.mark.parametrize("m, blocks", [(3, (4,)), (3, (0, 1)), (2, (1, 3))])
def test_block_too_large(m, blocks):
    with pytest.raises(BlockTooLarge):
        parabolic_labels(m, blocks)


@pytest.mark.parametrize("m", [1, 0])
def test_rank_below_two_rejected(m):
    with pytest.raises(BlockTooLarge, match="m должно быть"):
        parabolic_labels(m, (1,))


def test_to_json():
    data = parabolic_labels(2, (1,)).to_json()
    assert data == {"m": 2, "blocks": [1], "count": 2, "labels": [[[2]], [[1]]]}
