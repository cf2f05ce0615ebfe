"""Кусочно-линейные пути и корневые операторы e_i, f_i в точной рациональной арифметике.

Точка пути хранится как s·ν − Σ c_j α_j (WeightPoint), t ∈ [0, 1].
Канонический вид: нет точек излома, где скорость не меняется.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from kac_crystals.algebra.cartan import CartanData
from kac_crystals.algebra.weights import Weight
from kac_crystals.core.errors import NotDominant

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class WeightPoint:
    """Точка hw_scale·λ − Σ root_coeffs[j]·α_j весового пространства."""

    hw_scale: Fraction
    root_coeffs: tuple[Fraction, ...]
    hw_ref: tuple[int, ...]

    def pairing(self, cartan: CartanData, i: int) -> Fraction:
        row = cartan.a[i]
        return self.hw_scale * self.hw_ref[i] - sum(
            (row[j] * c for j, c in enumerate(self.root_coeffs) if row[j]), ZERO,
        )

    def shifted(self, i: int, amount: Fraction) -> WeightPoint:
        """Точка минус amount·α_i."""
        coeffs = list(self.root_coeffs)
        coeffs[i] += amount
        return WeightPoint(self.hw_scale, tuple(coeffs), self.hw_ref)

    def lerp(self, other: WeightPoint, theta: Fraction) -> WeightPoint:
        return WeightPoint(
            self.hw_scale + theta * (other.hw_scale - self.hw_scale),
            tuple(a + theta * (b - a) for a, b in zip(self.root_coeffs, other.root_coeffs)),
            self.hw_ref,
        )

    def vector(self) -> tuple[Fraction, ...]:
        return (self.hw_scale, *self.root_coeffs)


@dataclass(frozen=True)
class PLPath:
    """Нормализованный кусочно-линейный путь из начала координат."""

    cartan: CartanData
    breakpoints: tuple[tuple[Fraction, WeightPoint], ...]

    @property
    def hw_ref(self) -> tuple[int, ...]:
        return self.breakpoints[0][1].hw_ref

    @property
    def endpoint(self) -> WeightPoint:
        return self.breakpoints[-1][1]

    def weight(self) -> Weight:
        end = self.endpoint
        if end.hw_scale != 1 or any(c.denominator != 1 for c in end.root_coeffs):
            raise ValueError(f"конец пути не целый: {end}")
        return Weight(self.hw_ref, tuple(int(c) for c in end.root_coeffs))

    def heights(self, i: int) -> list[Fraction]:
        """Значения h_i(t) = <π(t), α_i^∨> в точках излома."""
        return [point.pairing(self.cartan, i) for _, point in self.breakpoints]

    def epsilon(self, i: int) -> int:
        return int(-min(self.heights(i)))

    def phi(self, i: int) -> int:
        heights = self.heights(i)
        return int(heights[-1] - min(heights))

    def key(self) -> str:
        """Канонический ключ: t:s,c_0,...;... с несократимыми дробями."""
        return ";".join(
            f"{t}:" + ",".join(str(x) for x in point.vector())
            for t, point in self.breakpoints
        )

    @classmethod
    def from_key(cls, cartan: CartanData, hw: Sequence[int], key: str) -> PLPath:
        hw_ref = tuple(int(x) for x in hw)
        breakpoints = []
        for chunk in key.split(";"):
            t, coords = chunk.split(":")
            values = [Fraction(x) for x in coords.split(",")]
            breakpoints.append(
                (Fraction(t), WeightPoint(values[0], tuple(values[1:]), hw_ref))
            )
        return cls(cartan, tuple(breakpoints))


def straight_path(cartan: CartanData, hw: Sequence[int]) -> PLPath:
    """Путь t ↦ tν -- старший элемент B(ν)."""
    hw_ref = tuple(int(x) for x in hw)
    if len(hw_ref) != cartan.rank:
        raise NotDominant(f"ожидалось {cartan.rank} меток Дынкина, получено {list(hw_ref)}")
    if any(x < 0 for x in hw_ref):
        raise NotDominant(f"вес {list(hw_ref)} не доминантный")
    zeros = (ZERO,) * cartan.rank
    return PLPath(cartan, (
        (ZERO, WeightPoint(ZERO, zeros, hw_ref)),
        (ONE, WeightPoint(ONE, zeros, hw_ref)),
    ))


def root_operator_f(path: PLPath, i: int) -> PLPath | None:
    """Понижающий оператор f_i; None, если φ_i = 0."""
    points = list(path.breakpoints)
    heights = path.heights(i)
    m = min(heights)
    if heights[-1] - m < 1:
        return None

    # p -- последний момент минимума, x -- первый момент после p, где h = m + 1
    k_p = max(k for k, h in enumerate(heights) if h == m)
    points, heights, k_x = _cut_at_level(points, heights, k_p, m + 1, forward=True)

    result = []
    for k, (t, point) in enumerate(points):
        if k <= k_p:
            result.append((t, point))
        elif k <= k_x:
            result.append((t, point.shifted(i, heights[k] - m)))
        else:
            result.append((t, point.shifted(i, ONE)))
    return PLPath(path.cartan, _normalize(result))


def root_operator_e(path: PLPath, i: int) -> PLPath | None:
    """Повышающий оператор e_i; None, если ε_i = 0."""
    points = list(path.breakpoints)
    heights = path.heights(i)
    m = min(heights)
    if m > -1:
        return None

    # q -- первый момент минимума, y -- последний момент до q, где h = m + 1
    k_q = min(k for k, h in enumerate(heights) if h == m)
    points, heights, k_y = _cut_at_level(points, heights, k_q, m + 1, forward=False)
    k_q += len(points) - len(path.breakpoints)

    result = []
    for k, (t, point) in enumerate(points):
        if k <= k_y:
            result.append((t, point))
        elif k <= k_q:
            result.append((t, point.shifted(i, heights[k] - (m + 1))))
        else:
            result.append((t, point.shifted(i, -ONE)))
    return PLPath(path.cartan, _normalize(result))


def _cut_at_level(
    points: list[tuple[Fraction, WeightPoint]],
    heights: list[Fraction],
    start: int,
    level: Fraction,
    *,
    forward: bool,
) -> tuple[list, list[Fraction], int]:
    """Найти от start первый (вперёд или назад) момент, где h = level; вставить точку излома.

    Возвращает новые списки и индекс найденной точки.
    """
    step = 1 if forward else -1
    k = start
    while True:
        nxt = k + step
        if heights[nxt] == level:
            return points, heights, nxt
        if (heights[nxt] > level) == (heights[k] < level):
            break
        k = nxt

    # уровень пересекается строго внутри отрезка (k, nxt)
    lo, hi = (k, nxt) if forward else (nxt, k)
    theta = (level - heights[lo]) / (heights[hi] - heights[lo])
    t_lo, p_lo = points[lo]
    t_hi, p_hi = points[hi]
    new_point = (t_lo + theta * (t_hi - t_lo), p_lo.lerp(p_hi, theta))
    points = points[:hi] + [new_point] + points[hi:]
    heights = heights[:hi] + [level] + heights[hi:]
    return points, heights, hi


def _normalize(
    points: list[tuple[Fraction, WeightPoint]],
) -> tuple[tuple[Fraction, WeightPoint], ...]:
    """Убрать точки излома, в которых скорость не меняется."""
    result = [points[0]]
    for k in range(1, len(points) - 1):
        t0, p0 = result[-1]
        t1, p1 = points[k]
        t2, p2 = points[k + 1]
        v0, v1, v2 = p0.vector(), p1.vector(), p2.vector()
        collinear = all(
            (b - a) * (t2 - t1) == (c - b) * (t1 - t0) for a, b, c in zip(v0, v1, v2)
        )
        if not collinear:
            result.append(points[k])
    result.append(points[-1])
    return tuple(result)
