"""Метки параболической категории 𝒪 и их биекция с тензорными метками
B(ω_{m_1}) ⊗ ... ⊗ B(ω_{m_n}) для sl_m.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from math import comb, prod
from typing import Any, Sequence

from kac_crystals.algebra.cartan import CartanData
from kac_crystals.core.errors import BlockTooLarge, UnknownLabel
from kac_crystals.crystals.graph import CrystalGraph, generate_crystal
from kac_crystals.crystals.tensor import TensorCrystal, TensorLabel, build_tensor

logger = logging.getLogger(__name__)

Block = tuple[int, ...]
ParabolicLabel = tuple[Block, ...]


@dataclass
class ParabolicLabels:
    """Кортежи строго убывающих блоков с элементами из 1..m."""

    m: int
    blocks: tuple[int, ...]
    labels: list[ParabolicLabel] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.labels)

    @property
    def expected_count(self) -> int:
        return prod(comb(self.m, size) for size in self.blocks)

    def block_weight(self, block: Block) -> tuple[int, ...]:
        """Метки Дынкина sl_m веса Σ_{s∈S} ε_s: (i-я) = [i+1 ∈ S] − [i+2 ∈ S]."""
        members = set(block)
        return tuple(int(i + 1 in members) - int(i + 2 in members) for i in range(self.m - 1))

    def label_weight(self, label: ParabolicLabel) -> tuple[int, ...]:
        total = [0] * (self.m - 1)
        for block in label:
            for i, x in enumerate(self.block_weight(block)):
                total[i] += x
        return tuple(total)

    def to_json(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "blocks": list(self.blocks),
            "count": self.count,
            "labels": [[list(b) for b in label] for label in self.labels],
        }


def parabolic_labels(m: int, blocks: Sequence[int]) -> ParabolicLabels:
    """Все метки; m >= 2, так как биекция строится в кристаллах sl_m."""
    if m < 2:
        raise BlockTooLarge(f"m должно быть >= 2, получено {m}")
    blocks = tuple(int(b) for b in blocks)
    for size in blocks:
        if not 1 <= size <= m:
            raise BlockTooLarge(f"размер блока {size} вне диапазона 1..{m}")
    # combinations по убывающему ряду дают строго убывающие блоки
    per_block = [list(itertools.combinations(range(m, 0, -1), size)) for size in blocks]
    labels = [tuple(choice) for choice in itertools.product(*per_block)]
    result = ParabolicLabels(m, blocks, labels)
    logger.info("Параболические метки m=%d, блоки %s: %d", m, list(blocks), result.count)
    return result


def fundamental_crystals(m: int, blocks: Sequence[int]) -> list[CrystalGraph]:
    """B(ω_k) для sl_m; блок размера m -- тривиальный кристалл B(0)."""
    if m < 2:
        raise BlockTooLarge("биекция с кристаллами требует m >= 2")
    cartan = CartanData.from_name(f"A{m - 1}")
    crystals = []
    for size in blocks:
        hw = [0] * (m - 1)
        if size < m:
            hw[size - 1] = 1
        crystals.append(generate_crystal(cartan, hw))
    return crystals


def parabolic_bijection(
    labels: ParabolicLabels,
) -> tuple[TensorCrystal, dict[ParabolicLabel, TensorLabel]]:
    """Сопоставить каждому блоку элемент фундаментального кристалла того же веса.

    Веса фундаментальных кристаллов sl_m попарно различны, поэтому соответствие однозначно.
    """
    tensor = build_tensor(fundamental_crystals(labels.m, labels.blocks))
    by_weight = []
    for factor in tensor.factors:
        table = {factor.weight(b).dynkin(tensor.cartan): b for b in factor.elements()}
        by_weight.append(table)

    mapping = {}
    for label in labels.labels:
        factors = []
        for j, block in enumerate(label):
            b = by_weight[j].get(labels.block_weight(block))
            if b is None:
                raise UnknownLabel(f"блок {block} не найден в сомножителе {j + 1}")
            factors.append(b)
        mapping[label] = TensorLabel(tuple(factors))
    return tensor, mapping
