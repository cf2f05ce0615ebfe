"""Базовый интерфейс кристалла."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Hashable, Iterator

from kac_crystals.algebra.cartan import CartanData
from kac_crystals.algebra.weights import Weight


class BaseCrystal(ABC):
    """Абстрактный нормальный кристалл над фиксированными данными Картана.

    Каждый кристалл предоставляет:
    - elements() -- сгенерированные элементы в детерминированном порядке
    - weight/epsilon/phi -- статистики элемента
    - e/f -- корневые операторы (None, если оператор не определён)
    Граф B(ν) и тензорное произведение реализуют один интерфейс, поэтому
    тензорное произведение само может быть сомножителем.
    """

    cartan: CartanData

    @abstractmethod
    def elements(self) -> list[Hashable]:
        ...

    @abstractmethod
    def weight(self, b: Hashable) -> Weight:
        ...

    @abstractmethod
    def epsilon(self, b: Hashable, i: int) -> int:
        ...

    @abstractmethod
    def phi(self, b: Hashable, i: int) -> int:
        ...

    @abstractmethod
    def e(self, b: Hashable, i: int) -> Hashable | None:
        ...

    @abstractmethod
    def f(self, b: Hashable, i: int) -> Hashable | None:
        ...

    @property
    @abstractmethod
    def highest_weight_element(self) -> Hashable:
        ...

    @property
    @abstractmethod
    def truncated(self) -> bool:
        ...

    @abstractmethod
    def contains(self, b: Hashable) -> bool:
        ...

    @property
    def index_set(self) -> tuple[int, ...]:
        return self.cartan.index_set

    def __len__(self) -> int:
        return len(self.elements())

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self.elements())

    def is_highest_weight(self, b: Hashable) -> bool:
        return all(self.epsilon(b, i) == 0 for i in self.index_set)

    def e_power(self, b: Hashable, i: int, k: int) -> Hashable | None:
        for _ in range(k):
            if b is None:
                return None
            b = self.e(b, i)
        return b

    def f_power(self, b: Hashable, i: int, k: int) -> Hashable | None:
        for _ in range(k):
            if b is None:
                return None
            b = self.f(b, i)
        return b

    def lowest_in_string(self, b: Hashable, i: int) -> Hashable:
        """Конец i-струны через b (f_i^{φ_i} b)."""
        return self.f_power(b, i, self.phi(b, i))
