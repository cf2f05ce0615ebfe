"""Строковая параметризация элементов и порядки на последовательностях показателей."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from math import lcm
from typing import Hashable, Sequence

from kac_crystals.core.errors import NonTerminating, WordMismatch, WordSupportIncomplete
from kac_crystals.core.types import Ordering
from kac_crystals.crystals.base import BaseCrystal

logger = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 100_000


@dataclass(frozen=True)
class StringWord:
    """Бесконечное слово i_1, i_2, ...: конечный префикс и повторяющийся цикл."""

    prefix: tuple[int, ...]
    cycle: tuple[int, ...]

    @classmethod
    def cyclic(cls, index_set: Sequence[int]) -> StringWord:
        """Слово по умолчанию: I, I, I, ... в порядке вершин."""
        return cls((), tuple(index_set))

    def validate(self, index_set: Sequence[int]) -> None:
        missing = set(index_set) - set(self.cycle)
        if not self.cycle or missing:
            raise WordSupportIncomplete(
                f"цикл {list(self.cycle)} не содержит вершины {sorted(missing)}"
            )
        unknown = (set(self.prefix) | set(self.cycle)) - set(index_set)
        if unknown:
            raise WordSupportIncomplete(f"слово содержит неизвестные вершины {sorted(unknown)}")

    def index_at(self, k: int) -> int:
        if k < len(self.prefix):
            return self.prefix[k]
        return self.cycle[(k - len(self.prefix)) % len(self.cycle)]

    def head(self, length: int) -> tuple[int, ...]:
        return tuple(self.index_at(k) for k in range(length))

    def same_as(self, other: StringWord) -> bool:
        """Равенство бесконечных слов, а не их записей."""
        if not self.cycle or not other.cycle:
            return self == other
        span = max(len(self.prefix), len(other.prefix)) + lcm(len(self.cycle), len(other.cycle))
        return self.head(span) == other.head(span)

    def __str__(self) -> str:
        prefix = ",".join(map(str, self.prefix))
        cycle = ",".join(map(str, self.cycle))
        return f"{prefix}|({cycle})*" if prefix else f"({cycle})*"

    @classmethod
    def parse(cls, text: str) -> StringWord:
        """'0,1' -- цикл; '2|0,1' -- префикс 2, затем цикл 0,1."""
        prefix_text, _, cycle_text = text.rpartition("|")
        prefix = tuple(int(x) for x in prefix_text.split(",") if x.strip())
        cycle = tuple(int(x) for x in cycle_text.split(",") if x.strip())
        return cls(prefix, cycle)


@dataclass(frozen=True)
class StringParam:
    """Показатели (a_1, a_2, ...) без хвостовых нулей.

    origin -- старший элемент, на котором остановилось исчерпание; в приводимом
    кристалле это старший элемент компоненты, а не всего кристалла.
    """

    word: StringWord
    exponents: tuple[int, ...]
    origin: Hashable | None = field(default=None, compare=False)

    def padded(self, length: int) -> tuple[int, ...]:
        return self.exponents + (0,) * (length - len(self.exponents))

    def total(self) -> int:
        return sum(self.exponents)

    def to_text(self) -> str:
        return ".".join(map(str, self.exponents))

    @classmethod
    def from_text(cls, word: StringWord, text: str) -> StringParam:
        values = tuple(int(x) for x in text.split(".") if x.strip())
        if any(x < 0 for x in values):
            raise ValueError(f"показатели должны быть неотрицательными: {text!r}")
        return cls(word, _trim(values))


def string_parametrization(
    crystal: BaseCrystal,
    b: Hashable,
    word: StringWord | None = None,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> StringParam:
    """Жадное исчерпание: a_k = ε_{i_k} после предыдущих шагов, до старшего элемента."""
    word = word or StringWord.cyclic(crystal.index_set)
    word.validate(crystal.index_set)

    exponents: list[int] = []
    current = b
    steps = 0
    for k in itertools.count():
        if crystal.is_highest_weight(current):
            break
        i = word.index_at(k)
        a = crystal.epsilon(current, i)
        current = crystal.e_power(current, i, a)
        exponents.append(a)
        steps += a + 1
        if steps > step_budget:
            raise NonTerminating(f"превышен лимит шагов {step_budget}")
    logger.debug("Строковая параметризация %r: %s", b, exponents)
    return StringParam(word, _trim(tuple(exponents)), origin=current)


def reconstruct(crystal: BaseCrystal, param: StringParam) -> Hashable | None:
    """Элемент f_{i_1}^{a_1} ... f_{i_k}^{a_k}(hw); None, если какой-то шаг не определён.

    hw -- param.origin, если он известен, иначе старший элемент кристалла.
    """
    current = crystal.highest_weight_element if param.origin is None else param.origin
    for k in reversed(range(len(param.exponents))):
        current = crystal.f_power(current, param.word.index_at(k), param.exponents[k])
        if current is None:
            return None
    return current


def find_by_string(
    crystal: BaseCrystal,
    param: StringParam,
) -> Hashable | None:
    """Элемент с данной параметризацией (проверяется обратным вычислением)."""
    start = crystal.highest_weight_element if param.origin is None else param.origin
    candidate = reconstruct(crystal, param)
    if candidate is None:
        return None
    found = string_parametrization(crystal, candidate, param.word)
    if found.exponents != param.exponents or found.origin != start:
        return None
    return candidate


def compare_exponent_sequences(a: StringParam, b: StringParam) -> Ordering:
    """Меньшая сумма -- больший элемент; при равных суммах -- лексикографически."""
    _check_words(a, b)
    if a.total() != b.total():
        return Ordering.GREATER if a.total() < b.total() else Ordering.LESS
    return lex_compare(a, b)


def lex_compare(a: StringParam, b: StringParam) -> Ordering:
    _check_words(a, b)
    length = max(len(a.exponents), len(b.exponents))
    left, right = a.padded(length), b.padded(length)
    if left == right:
        return Ordering.EQUAL
    return Ordering.GREATER if left > right else Ordering.LESS


def _check_words(a: StringParam, b: StringParam) -> None:
    if not a.word.same_as(b.word):
        raise WordMismatch(f"параметризации по разным словам: {a.word} и {b.word}")


def _trim(values: tuple[int, ...]) -> tuple[int, ...]:
    end = len(values)
    while end and values[end - 1] == 0:
        end -= 1
    return values[:end]
