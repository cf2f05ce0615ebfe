"""Целые веса, порядок доминирования и обратный порядок доминирования на кортежах."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import sympy

from kac_crystals.algebra.cartan import CartanData
from kac_crystals.core.errors import LengthMismatch, MixedCartanData
from kac_crystals.core.types import Ordering

logger = logging.getLogger(__name__)

NOT_IN_ROOT_LATTICE = "NotInRootLattice"
UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class Weight:
    """Целый вес Σ f_i ω_i − Σ c_j α_j.

    fundamental -- координаты по фундаментальным весам (обычно метки старшего веса),
    roots -- коэффициенты c_j при −α_j. Вершины кристалла B(ν) имеют fundamental = ν.
    """

    fundamental: tuple[int, ...]
    roots: tuple[int, ...]

    @classmethod
    def from_dynkin(cls, labels: Sequence[int]) -> Weight:
        labels = tuple(int(x) for x in labels)
        return cls(labels, (0,) * len(labels))

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((0,) * rank, (0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.fundamental)

    def pairing(self, cartan: CartanData, i: int) -> int:
        """<wt, α_i^∨>."""
        row = cartan.a[i]
        return self.fundamental[i] - sum(row[j] * c for j, c in enumerate(self.roots))

    def dynkin(self, cartan: CartanData) -> tuple[int, ...]:
        _check_rank(cartan, self)
        return tuple(self.pairing(cartan, i) for i in cartan.index_set)

    def minus_root(self, i: int, k: int = 1) -> Weight:
        roots = list(self.roots)
        roots[i] += k
        return Weight(self.fundamental, tuple(roots))

    def reflect(self, cartan: CartanData, i: int) -> Weight:
        """s_i(μ) = μ − <μ, α_i^∨> α_i."""
        return self.minus_root(i, self.pairing(cartan, i))

    def __add__(self, other: Weight) -> Weight:
        if self.rank != other.rank:
            raise MixedCartanData("складываются веса разного ранга")
        return Weight(
            tuple(a + b for a, b in zip(self.fundamental, other.fundamental)),
            tuple(a + b for a, b in zip(self.roots, other.roots)),
        )

    def sort_key(self) -> tuple:
        return (self.roots, self.fundamental)

    def to_json(self, cartan: CartanData) -> dict:
        return {
            "fundamental": list(self.fundamental),
            "roots": list(self.roots),
            "dynkin": list(self.dynkin(cartan)),
        }

    def __str__(self) -> str:
        return f"{list(self.fundamental)}-{list(self.roots)}α"


@dataclass(frozen=True)
class WeightTuple:
    """Кортеж весов (μ_1, ..., μ_n), по одному на тензорный сомножитель."""

    cartan: CartanData
    entries: tuple[Weight, ...]

    def __post_init__(self) -> None:
        for w in self.entries:
            _check_rank(self.cartan, w)

    def __len__(self) -> int:
        return len(self.entries)

    def partial_sums(self) -> list[Weight]:
        return list(itertools.accumulate(self.entries, lambda a, b: a + b))

    def total(self) -> Weight:
        return self.partial_sums()[-1]


@dataclass(frozen=True)
class DominanceVerdict:
    """Ответ dominance_leq: истинность плюс причина отказа."""

    holds: bool
    reason: str | None = None
    difference: tuple[Fraction, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def root_difference(
    beta1: Weight, beta2: Weight, cartan: CartanData,
) -> tuple[Fraction, ...] | None:
    """Координаты β2 − β1 по простым корням; None, если они не определены однозначно."""
    _check_rank(cartan, beta1)
    _check_rank(cartan, beta2)
    delta_f = [b - a for a, b in zip(beta1.fundamental, beta2.fundamental)]
    delta_c = [Fraction(b - a) for a, b in zip(beta1.roots, beta2.roots)]
    if not any(delta_f):
        return tuple(-c for c in delta_c)
    if not cartan.is_invertible:
        return None
    # Σ Δf_i ω_i = Σ x_j α_j  <=>  A x = Δf
    solution = cartan.sympy_matrix.LUsolve(sympy.Matrix(delta_f))
    xs = [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in solution]
    return tuple(x - c for x, c in zip(xs, delta_c))


def dominance_leq(beta1: Weight, beta2: Weight, cartan: CartanData) -> DominanceVerdict:
    """β1 ≤ β2, если β2 − β1 -- неотрицательная целая комбинация простых корней."""
    diff = root_difference(beta1, beta2, cartan)
    if diff is None:
        return DominanceVerdict(False, UNDETERMINED)
    if any(x.denominator != 1 for x in diff):
        return DominanceVerdict(False, NOT_IN_ROOT_LATTICE, diff)
    return DominanceVerdict(all(x >= 0 for x in diff), None, diff)


def weights_equal(beta1: Weight, beta2: Weight, cartan: CartanData) -> bool:
    if beta1 == beta2:
        return True
    diff = root_difference(beta1, beta2, cartan)
    return diff is not None and not any(diff)


def tuple_geq(mu: WeightTuple, nu: WeightTuple) -> bool:
    """μ ⩾ μ′: равные суммы и Σ_{i≤j} μ_i ≤ Σ_{i≤j} μ′_i для j = 1..n−1."""
    cartan = mu.cartan
    left, right = mu.partial_sums(), nu.partial_sums()
    if not weights_equal(left[-1], right[-1], cartan):
        return False
    return all(dominance_leq(a, b, cartan) for a, b in zip(left[:-1], right[:-1]))


def inverse_dominance_compare(mu: WeightTuple, nu: WeightTuple) -> Ordering:
    """Сравнить два кортежа весов в обратном порядке доминирования."""
    if mu.cartan != nu.cartan:
        raise MixedCartanData("кортежи построены над разными данными Картана")
    if len(mu) != len(nu):
        raise LengthMismatch(f"длины кортежей {len(mu)} и {len(nu)}")
    cartan = mu.cartan
    if all(weights_equal(a, b, cartan) for a, b in zip(mu.entries, nu.entries)):
        return Ordering.EQUAL
    if not weights_equal(mu.total(), nu.total(), cartan):
        return Ordering.INCOMPARABLE
    if tuple_geq(mu, nu):
        return Ordering.GREATER
    if tuple_geq(nu, mu):
        return Ordering.LESS
    return Ordering.INCOMPARABLE


def strictly_greater_tuples(
    xi: WeightTuple, weight_systems: Sequence[Iterable[Weight]],
) -> list[WeightTuple]:
    """Все ξ′ > ξ среди кортежей из произведения весовых систем с той же суммой."""
    if len(weight_systems) != len(xi):
        raise LengthMismatch("число весовых систем не совпадает с длиной кортежа")
    result = []
    for entries in itertools.product(*(list(ws) for ws in weight_systems)):
        candidate = WeightTuple(xi.cartan, tuple(entries))
        if inverse_dominance_compare(candidate, xi) is Ordering.GREATER:
            result.append(candidate)
    logger.debug("Над %s найдено %d строго больших кортежей", xi.entries, len(result))
    return result


def _check_rank(cartan: CartanData, weight: Weight) -> None:
    if weight.rank != cartan.rank or len(weight.roots) != cartan.rank:
        raise MixedCartanData(f"вес ранга {weight.rank} над данными ранга {cartan.rank}")
