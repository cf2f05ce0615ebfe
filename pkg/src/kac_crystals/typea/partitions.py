"""Разбиения, вычеты клеток и конденсация по диагоналям с вычетом r (mod p).

Клетка (x, y): x -- столбец, y -- строка, считая с нуля; содержание x − y.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from math import comb, prod
from typing import Any, Iterator

from kac_crystals.core.errors import BadResidue

logger = logging.getLogger(__name__)

_POWER_RE = re.compile(r"^(\d+)\^(\d+)$")


@dataclass(frozen=True, order=True)
class Partition:
    """Невозрастающий кортеж положительных частей."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"части разбиения должны быть положительны: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"части разбиения должны не возрастать: {self.parts}")

    @classmethod
    def parse(cls, text: str) -> Partition:
        """'7,5,1,1,1,1,1', '7,5,1^5', '' или '0' -- пустое разбиение."""
        parts: list[int] = []
        for chunk in text.replace(" ", "").split(","):
            if not chunk:
                continue
            match = _POWER_RE.match(chunk)
            if match:
                parts.extend([int(match.group(1))] * int(match.group(2)))
            else:
                parts.append(int(chunk))
        return cls(tuple(p for p in parts if p != 0))

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    def boxes(self) -> Iterator[tuple[int, int]]:
        for y, length in enumerate(self.parts):
            for x in range(length):
                yield (x, y)

    def contains_box(self, x: int, y: int) -> bool:
        return y < len(self.parts) and x < self.parts[y]

    def diagonal_depth(self, content: int) -> int:
        """Число клеток на диагонали с данным содержанием."""
        depth = 0
        x, y = max(content, 0), max(-content, 0)
        while self.contains_box(x + depth, y + depth):
            depth += 1
        return depth

    def residue_boxes(self, p: int, r: int) -> frozenset[tuple[int, int]]:
        return frozenset((x, y) for x, y in self.boxes() if (x - y) % p == r)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "∅"


@dataclass(frozen=True)
class WedgeFactor:
    """Сомножитель ⋀^m 𝕂^p; тривиален при m = 0 или m = p."""

    m: int
    p: int

    @property
    def trivial(self) -> bool:
        return self.m in (0, self.p)

    @property
    def dimension(self) -> int:
        return comb(self.p, self.m)

    def __str__(self) -> str:
        if self.m == 1:
            return f"𝕂^{self.p}"
        return f"⋀^{self.m}𝕂^{self.p}"


@dataclass(frozen=True)
class CondensationProfile:
    """Отмеченные клетки и числа m_k = y_k − y_{k+1}."""

    partition: Partition
    p: int
    r: int
    contents: tuple[int, ...]
    points: tuple[tuple[int, int], ...]

    @property
    def marked_boxes(self) -> tuple[tuple[int, int], ...]:
        """В порядке убывания содержания, как на диаграмме: от (x_ℓ, 0) до (0, y_0)."""
        return tuple(reversed(self.points))

    @property
    def m(self) -> tuple[int, ...]:
        return tuple(a[1] - b[1] for a, b in zip(self.points, self.points[1:]))

    @property
    def factors(self) -> tuple[WedgeFactor, ...]:
        return tuple(WedgeFactor(m, self.p) for m in self.m)

    @property
    def nontrivial_factors(self) -> tuple[WedgeFactor, ...]:
        return tuple(f for f in self.factors if not f.trivial)

    @property
    def dimension(self) -> int:
        """Размерность тензорного произведения = размер класса эквивалентности."""
        return prod(f.dimension for f in self.factors)

    def factors_text(self) -> str:
        nontrivial = self.nontrivial_factors
        return " ⊗ ".join(str(f) for f in nontrivial) if nontrivial else "𝕂"

    def to_json(self) -> dict[str, Any]:
        return {
            "partition": list(self.partition.parts),
            "p": self.p,
            "r": self.r,
            "marked_boxes": [list(b) for b in self.marked_boxes],
            "m": list(self.m),
            "factors": [
                {"m": f.m, "p": f.p, "trivial": f.trivial, "label": str(f)}
                for f in self.factors
            ],
            "dimension": self.dimension,
        }


def _check_residue(p: int, r: int) -> None:
    if p < 2:
        raise BadResidue(f"модуль p должен быть >= 2, получено {p}")
    if not 0 <= r < p:
        raise BadResidue(f"вычет r должен лежать в 0..{p - 1}, получено {r}")


def _boundary_contents(partition: Partition, p: int, r: int) -> tuple[int, int]:
    """Первые пустые диагонали слева (внизу) и справа с содержанием ≡ r."""
    left = -len(partition)
    left -= (left - r) % p
    right = partition.first
    right += (r - right) % p
    return left, right


def residue_condense(partition: Partition, p: int, r: int) -> CondensationProfile:
    """Самая дальняя клетка каждой диагонали с содержанием ≡ r (mod p), включая пустые края."""
    _check_residue(p, r)
    left, right = _boundary_contents(partition, p, r)
    contents = tuple(range(left, right + 1, p))
    points = []
    for k in contents:
        depth = partition.diagonal_depth(k)
        points.append((max(k, 0) + depth, max(-k, 0) + depth))
    profile = CondensationProfile(partition, p, r, contents, tuple(points))
    logger.info(
        "Конденсация %s (p=%d, r=%d): m=%s, %s",
        partition, p, r, list(profile.m), profile.factors_text(),
    )
    return profile


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """Все разбиения, помещающиеся в прямоугольник rows × cols."""

    def extend(prefix: list[int], limit: int) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        if len(prefix) == rows:
            return
        for part in range(1, limit + 1):
            prefix.append(part)
            yield from extend(prefix, part)
            prefix.pop()

    for parts in extend([], cols):
        yield Partition(parts)


def residue_class(partition: Partition, p: int, r: int) -> list[Partition]:
    """Класс ∼_r: разбиения с тем же множеством клеток вычета r.

    Пустые граничные диагонали ограничивают класс прямоугольником, перебор -- в нём.
    """
    _check_residue(p, r)
    left, right = _boundary_contents(partition, p, r)
    target = partition.residue_boxes(p, r)
    found = [
        mu for mu in partitions_in_box(-left, right)
        if mu.residue_boxes(p, r) == target
    ]
    logger.debug("Класс %s по вычету %d (mod %d): %d разбиений", partition, r, p, len(found))
    return sorted(found)
