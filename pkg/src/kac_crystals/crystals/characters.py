"""Характеры кристаллов, формула размерности Вейля, положительные корни."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from kac_crystals.algebra.cartan import CartanData
from kac_crystals.algebra.weights import Weight
from kac_crystals.core.errors import (
    InvariantViolation,
    NotDominant,
    NotFiniteType,
    PartialCharacterComparison,
    TruncatedWithoutFlag,
)
from kac_crystals.core.types import CartanKind
from kac_crystals.crystals.base import BaseCrystal
from kac_crystals.crystals.graph import generate_crystal
from kac_crystals.crystals.tensor import build_tensor, h_stats

logger = logging.getLogger(__name__)

_ROOT_LIMIT = 10_000


@dataclass(eq=False)
class Character:
    """Вес -> кратность. partial=True у характеров усечённых графов."""

    cartan: CartanData
    entries: dict[tuple, tuple[Weight, int]] = field(default_factory=dict)
    partial: bool = False

    def add(self, weight: Weight, count: int = 1) -> None:
        key = _weight_key(self.cartan, weight)
        _, old = self.entries.get(key, (weight, 0))
        self.entries[key] = (weight, old + count)

    def multiplicity(self, weight: Weight) -> int:
        return self.entries.get(_weight_key(self.cartan, weight), (weight, 0))[1]

    def weights(self) -> list[Weight]:
        return [w for w, _ in self.entries.values()]

    @property
    def size(self) -> int:
        return sum(count for _, count in self.entries.values())

    def __mul__(self, other: Character) -> Character:
        """Свёртка: характер тензорного произведения."""
        result = Character(self.cartan, partial=self.partial or other.partial)
        for w1, c1 in self.entries.values():
            for w2, c2 in other.entries.values():
                result.add(w1 + w2, c1 * c2)
        return result

    def __add__(self, other: Character) -> Character:
        result = Character(self.cartan, dict(self.entries), self.partial or other.partial)
        for w, c in other.entries.values():
            result.add(w, c)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        if self.partial != other.partial:
            raise PartialCharacterComparison("сравнение частичного характера с полным")
        mine = {k: c for k, (_, c) in self.entries.items()}
        theirs = {k: c for k, (_, c) in other.entries.items()}
        return mine == theirs

    def is_reflection_invariant(self) -> bool:
        """mult(μ) = mult(s_i μ) для всех i (конечный тип, полный характер)."""
        return all(
            self.multiplicity(w.reflect(self.cartan, i)) == count
            for w, count in self.entries.values()
            for i in self.cartan.index_set
        )

    def to_json(self) -> list[dict[str, Any]]:
        ordered = sorted(self.entries.values(), key=lambda item: item[0].sort_key())
        return [
            {"weight": w.to_json(self.cartan), "multiplicity": count}
            for w, count in ordered
        ]


def _weight_key(cartan: CartanData, weight: Weight) -> tuple:
    """Для обратимой матрицы вес определяется метками Дынкина."""
    if cartan.is_invertible:
        return weight.dynkin(cartan)
    return (weight.fundamental, weight.roots)


def character(crystal: BaseCrystal, partial: bool = False) -> Character:
    if crystal.truncated and not partial:
        raise TruncatedWithoutFlag("граф усечён; для частичного характера передайте partial=True")
    if crystal.truncated:
        logger.warning("Частичный характер усечённого кристалла")
    result = Character(crystal.cartan, partial=crystal.truncated)
    for b in crystal.elements():
        result.add(crystal.weight(b))
    return result


def positive_roots(cartan: CartanData) -> list[tuple[int, ...]]:
    """Положительные корни в координатах простых корней (замыкание отражениями)."""
    _require_finite(cartan)
    n = cartan.rank
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in cartan.index_set:
            pairing = sum(cartan.a[i][j] * beta[j] for j in range(n))
            image = tuple(b - pairing * (j == i) for j, b in enumerate(beta))
            if all(x >= 0 for x in image) and image not in seen:
                seen.add(image)
                queue.append(image)
                if len(seen) > _ROOT_LIMIT:
                    raise NotFiniteType(f"{cartan}: слишком много корней")
    return sorted(seen, key=lambda r: (sum(r), r))


def weyl_dimension(cartan: CartanData, hw: Sequence[int]) -> int:
    """Π_{β>0} (ν+ρ, β) / (ρ, β), скалярное произведение через симметризатор."""
    _require_finite(cartan)
    hw = tuple(int(x) for x in hw)
    if len(hw) != cartan.rank or any(x < 0 for x in hw):
        raise NotDominant(f"вес {list(hw)} не доминантный над {cartan}")
    result = Fraction(1)
    for beta in positive_roots(cartan):
        rho = sum(k * cartan.d[j] for j, k in enumerate(beta))
        shifted = sum(k * cartan.d[j] * (hw[j] + 1) for j, k in enumerate(beta))
        result *= Fraction(shifted, rho)
    if result.denominator != 1:
        raise ArithmeticError(f"нецелая размерность {result}")
    return int(result)


def weight_system(crystal: BaseCrystal) -> list[Weight]:
    """Веса кристалла как объединение W-орбит его доминантных весов."""
    cartan = crystal.cartan
    _require_finite(cartan)
    dominant = {
        crystal.weight(b) for b in crystal.elements()
        if all(x >= 0 for x in crystal.weight(b).dynkin(cartan))
    }
    orbit = set(dominant)
    queue = deque(dominant)
    while queue:
        w = queue.popleft()
        for i in cartan.index_set:
            image = w.reflect(cartan, i)
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    return sorted(orbit, key=Weight.sort_key)


def cyclotomic_dot_dimension(cartan: CartanData, hws: Sequence[Sequence[int]], i: int) -> int:
    """α_i^∨(ν) = Σ_j <ν_j, α_i^∨>, сверенное с φ_i старшей метки тензорного кристалла."""
    expected = sum(int(hw[i]) for hw in hws)
    tensor = build_tensor([generate_crystal(cartan, hw, depth_cutoff=0) for hw in hws])
    _, h_minus = h_stats(tensor, tensor.highest_weight_element, i)
    if h_minus != expected:
        raise InvariantViolation(f"φ_{i}(𝕍) = {h_minus}, ожидалось {expected}")
    return expected


def _require_finite(cartan: CartanData) -> None:
    if cartan.kind is not CartanKind.FINITE:
        raise NotFiniteType(f"{cartan} не конечного типа ({cartan.kind.value})")
