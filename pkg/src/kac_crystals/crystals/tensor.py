"""Упорядоченное тензорное произведение кристаллов и правило i-сигнатуры.

Сигнатура метки (b_1, ..., b_n): для каждого сомножителя ε_i(b_j) плюсов, затем φ_i(b_j)
минусов, группы слева направо. Пары «−+» (без учёта зачёркнутых) зачёркиваются; e_i действует
в группе самого правого незачёркнутого +, f_i -- в группе самого левого незачёркнутого −.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Sequence

import networkx as nx

from kac_crystals.algebra.cartan import CartanData
from kac_crystals.algebra.weights import Weight, WeightTuple
from kac_crystals.core.errors import (
    EmptyFactorList,
    FactorIndexOutOfRange,
    InvariantViolation,
    MixedCartanData,
    TruncatedRange,
    UnknownLabel,
)
from kac_crystals.crystals.base import BaseCrystal

logger = logging.getLogger(__name__)

PLUS = "+"
MINUS = "−"
STRIKE = "̶"


@dataclass(frozen=True, order=True)
class TensorLabel:
    """Метка (b_1, ..., b_n); порядок сомножителей существенен."""

    factors: tuple[Hashable, ...]

    def __len__(self) -> int:
        return len(self.factors)

    def __getitem__(self, j: int) -> Hashable:
        return self.factors[j]

    def replace(self, j: int, b: Hashable) -> TensorLabel:
        factors = list(self.factors)
        factors[j] = b
        return TensorLabel(tuple(factors))


def flatten_label(label: Hashable) -> tuple[Hashable, ...]:
    """Развернуть вложенные метки: ((b1, b2), b3) -> (b1, b2, b3)."""
    if isinstance(label, TensorLabel):
        return tuple(x for factor in label.factors for x in flatten_label(factor))
    return (label,)


# -- сигнатуры --

@dataclass(frozen=True)
class Signature:
    """i-сигнатура: группы (число +, число −) по сомножителям."""

    groups: tuple[tuple[int, int], ...]

    @property
    def symbols(self) -> tuple[tuple[int, str], ...]:
        """Плоская последовательность (номер группы, знак)."""
        return tuple(
            (j, sign)
            for j, (plus, minus) in enumerate(self.groups)
            for sign in (PLUS * plus + MINUS * minus)
        )

    def __len__(self) -> int:
        return sum(plus + minus for plus, minus in self.groups)

    def flat(self) -> str:
        return "".join(sign for _, sign in self.symbols)

    def grouped(self) -> str:
        return "".join(f"({PLUS * p}{MINUS * m})" for p, m in self.groups)

    def tail(self, k: int) -> Signature:
        """Подсигнатура групп k..n (k с единицы)."""
        return Signature(self.groups[k - 1:])


@dataclass(frozen=True)
class ReducedSignature:
    """Сигнатура с отметками зачёркивания."""

    signature: Signature
    crossed: tuple[bool, ...]
    pairs: tuple[tuple[int, int], ...] = field(default=())

    @property
    def uncrossed(self) -> list[tuple[int, int, str]]:
        """(позиция, группа, знак) незачёркнутых символов."""
        return [
            (pos, j, sign)
            for pos, ((j, sign), hit) in enumerate(zip(self.signature.symbols, self.crossed))
            if not hit
        ]

    @property
    def rightmost_plus(self) -> int | None:
        positions = [pos for pos, _, sign in self.uncrossed if sign == PLUS]
        return positions[-1] if positions else None

    @property
    def leftmost_minus(self) -> int | None:
        positions = [pos for pos, _, sign in self.uncrossed if sign == MINUS]
        return positions[0] if positions else None

    @property
    def h_plus(self) -> int:
        return sum(1 for _, _, sign in self.uncrossed if sign == PLUS)

    @property
    def h_minus(self) -> int:
        return sum(1 for _, _, sign in self.uncrossed if sign == MINUS)

    def crossed_positions(self) -> list[int]:
        """Зачёркнутые позиции, нумерация с единицы."""
        return [pos + 1 for pos, hit in enumerate(self.crossed) if hit]

    def group_of(self, pos: int) -> int:
        return self.signature.symbols[pos][0]

    def render(self) -> str:
        """Сигнатура с зачёркнутыми символами (U+0336)."""
        body = "".join(
            sign + STRIKE if hit else sign
            for (_, sign), hit in zip(self.signature.symbols, self.crossed)
        )
        return f"({body})"

    def reduced_form(self) -> str:
        return "".join(sign for _, _, sign in self.uncrossed)


def reduce_signature(signature: Signature) -> ReducedSignature:
    """Зачёркивание пар «−+» скобочным сопоставлением: − открывает, + закрывает."""
    symbols = signature.symbols
    crossed = [False] * len(symbols)
    pairs = []
    stack: list[int] = []
    for pos, (_, sign) in enumerate(symbols):
        if sign == MINUS:
            stack.append(pos)
        elif stack:
            left = stack.pop()
            crossed[left] = crossed[pos] = True
            pairs.append((left, pos))
    return ReducedSignature(signature, tuple(crossed), tuple(sorted(pairs)))


def reduce_signature_by_scan(
    signature: Signature,
    choose: Callable[[list[int]], int] | None = None,
) -> ReducedSignature:
    """Буквальное зачёркивание: на каждом шаге выбрать одну из соседних пар «−+».

    choose получает позиции минусов доступных пар и возвращает одну из них;
    по умолчанию берётся самая левая пара.
    """
    symbols = signature.symbols
    crossed = [False] * len(symbols)
    pairs = []
    while True:
        alive = [pos for pos, hit in enumerate(crossed) if not hit]
        candidates = [
            (left, right)
            for left, right in zip(alive, alive[1:])
            if symbols[left][1] == MINUS and symbols[right][1] == PLUS
        ]
        if not candidates:
            break
        lefts = [left for left, _ in candidates]
        picked = choose(lefts) if choose else lefts[0]
        right = dict(candidates)[picked]
        crossed[picked] = crossed[right] = True
        pairs.append((picked, right))
    return ReducedSignature(signature, tuple(crossed), tuple(sorted(pairs)))


# -- тензорный кристалл --

class TensorCrystal(BaseCrystal):
    """B_1 ⊗ ... ⊗ B_n над общими данными Картана.

    Статистики сомножителей берутся у самих сомножителей; для графов модели путей
    это точные значения и на границе усечения.
    """

    def __init__(self, factors: Sequence[BaseCrystal]) -> None:
        if not factors:
            raise EmptyFactorList("тензорное произведение требует хотя бы один сомножитель")
        cartan = factors[0].cartan
        for factor in factors[1:]:
            if factor.cartan != cartan:
                raise MixedCartanData(f"сомножители над {cartan} и {factor.cartan}")
        self.cartan: CartanData = cartan
        self.factors: tuple[BaseCrystal, ...] = tuple(factors)
        self._elements: list[TensorLabel] | None = None
        self._weights: dict[TensorLabel, Weight] = {}

    @property
    def n(self) -> int:
        return len(self.factors)

    # -- BaseCrystal --

    def elements(self) -> list[TensorLabel]:
        if self._elements is None:
            self._elements = [
                TensorLabel(tuple(combo))
                for combo in itertools.product(*(f.elements() for f in self.factors))
            ]
        return self._elements

    def __len__(self) -> int:
        size = 1
        for factor in self.factors:
            size *= len(factor)
        return size

    @property
    def highest_weight_element(self) -> TensorLabel:
        """Метка 𝕍 = (hw_1, ..., hw_n)."""
        return TensorLabel(tuple(f.highest_weight_element for f in self.factors))

    @property
    def truncated(self) -> bool:
        return any(f.truncated for f in self.factors)

    def contains(self, label: Hashable) -> bool:
        return (
            isinstance(label, TensorLabel)
            and len(label) == self.n
            and all(f.contains(b) for f, b in zip(self.factors, label.factors))
        )

    def weight(self, label: TensorLabel) -> Weight:
        cached = self._weights.get(label)
        if cached is None:
            self._check(label)
            parts = [f.weight(b) for f, b in zip(self.factors, label.factors)]
            cached = parts[0]
            for part in parts[1:]:
                cached = cached + part
            self._weights[label] = cached
        return cached

    def epsilon(self, label: TensorLabel, i: int) -> int:
        return h_stats(self, label, i)[0]

    def phi(self, label: TensorLabel, i: int) -> int:
        return h_stats(self, label, i)[1]

    def e(self, label: TensorLabel, i: int) -> TensorLabel | None:
        return tensor_e(self, label, i)

    def f(self, label: TensorLabel, i: int) -> TensorLabel | None:
        return tensor_f(self, label, i)

    # -- метки --

    def weight_tuple(self, label: TensorLabel) -> WeightTuple:
        """ϱ(λ) = (wt b_1, ..., wt b_n)."""
        self._check(label)
        return WeightTuple(
            self.cartan, tuple(f.weight(b) for f, b in zip(self.factors, label.factors)),
        )

    def labels_by_weight(self) -> dict[Weight, list[TensorLabel]]:
        grouped: dict[Weight, list[TensorLabel]] = {}
        for label in self.elements():
            grouped.setdefault(self.weight(label), []).append(label)
        return dict(sorted(grouped.items(), key=lambda item: item[0].sort_key()))

    def complete_depth(self) -> int | None:
        """Глубина, до которой все метки сгенерированы; None -- без ограничений."""
        depths = [d for d in (_complete_depth(f) for f in self.factors) if d is not None]
        return min(depths) if depths else None

    def _check(self, label: Hashable) -> None:
        if not isinstance(label, TensorLabel) or len(label) != self.n:
            raise UnknownLabel(f"ожидалась метка из {self.n} сомножителей: {label!r}")
        for j, (factor, b) in enumerate(zip(self.factors, label.factors), start=1):
            if not factor.truncated and not factor.contains(b):
                raise UnknownLabel(f"сомножитель {j}: элемент {b!r} не принадлежит кристаллу")

    def __repr__(self) -> str:
        return f"TensorCrystal({self.cartan}, n={self.n}, size={len(self)})"


def _complete_depth(crystal: BaseCrystal) -> int | None:
    if isinstance(crystal, TensorCrystal):
        return crystal.complete_depth()
    if crystal.truncated:
        return getattr(crystal, "depth_used", 0)
    return None


def build_tensor(crystals: Sequence[BaseCrystal]) -> TensorCrystal:
    tensor = TensorCrystal(crystals)
    if tensor.truncated:
        logger.warning("Тензорное произведение содержит усечённые сомножители")
    logger.info("Построено %r", tensor)
    return tensor


def i_signature(tensor: TensorCrystal, label: TensorLabel, i: int) -> Signature:
    tensor._check(label)
    return Signature(tuple(
        (factor.epsilon(b, i), factor.phi(b, i))
        for factor, b in zip(tensor.factors, label.factors)
    ))


def tensor_e(tensor: TensorCrystal, label: TensorLabel, i: int) -> TensorLabel | None:
    reduced = reduce_signature(i_signature(tensor, label, i))
    pos = reduced.rightmost_plus
    if pos is None:
        return None
    j = reduced.group_of(pos)
    return label.replace(j, tensor.factors[j].e(label[j], i))


def tensor_f(tensor: TensorCrystal, label: TensorLabel, i: int) -> TensorLabel | None:
    reduced = reduce_signature(i_signature(tensor, label, i))
    pos = reduced.leftmost_minus
    if pos is None:
        return None
    j = reduced.group_of(pos)
    return label.replace(j, tensor.factors[j].f(label[j], i))


def h_stats(tensor: TensorCrystal, label: TensorLabel, i: int) -> tuple[int, int]:
    """(h₊, h₋) -- числа незачёркнутых + и −."""
    reduced = reduce_signature(i_signature(tensor, label, i))
    return reduced.h_plus, reduced.h_minus


def h_minus_from(tensor: TensorCrystal, label: TensorLabel, i: int, k: int) -> int:
    """Число − в редуцированной подсигнатуре групп k..n (k с единицы)."""
    if not 1 <= k <= tensor.n:
        raise FactorIndexOutOfRange(f"k = {k} вне диапазона 1..{tensor.n}")
    return reduce_signature(i_signature(tensor, label, i).tail(k)).h_minus


def h_minus_profile(tensor: TensorCrystal, label: TensorLabel, i: int) -> list[int]:
    """[h₋,₁, ..., h₋,ₙ, 0]: последний элемент -- соглашение h₋,ₙ₊₁ = 0."""
    signature = i_signature(tensor, label, i)
    return [reduce_signature(signature.tail(k)).h_minus for k in range(1, tensor.n + 1)] + [0]


def alpha_indicator(
    tensor: TensorCrystal,
    lam: TensorLabel,
    mu: TensorLabel,
    ell: int,
    m: int,
    i: int,
) -> int:
    """1, если h₋(μ_ℓ) ⩾ h₋(λ_ℓ) = m и h₋,ℓ(μ) > h₋,ℓ₊₁(μ); иначе 0."""
    if not 1 <= ell <= tensor.n:
        raise FactorIndexOutOfRange(f"ℓ = {ell} вне диапазона 1..{tensor.n}")
    tensor._check(lam)
    tensor._check(mu)
    factor = tensor.factors[ell - 1]
    # одна группа не содержит пар «−+», поэтому h₋ сомножителя равно φ_i
    h_lam = factor.phi(lam[ell - 1], i)
    h_mu = factor.phi(mu[ell - 1], i)
    if not (h_lam == m and h_mu >= m):
        return 0
    profile = h_minus_profile(tensor, mu, i)
    return int(profile[ell - 1] > profile[ell])


def highest_weight_labels(
    tensor: TensorCrystal,
    weight_filter: Weight | None = None,
    max_depth: int | None = None,
) -> dict[Weight, list[TensorLabel]]:
    """Метки, убиваемые всеми e_i, сгруппированные по полному весу."""
    limit = tensor.complete_depth()
    if limit is not None:
        requested = _depth_of(weight_filter) if weight_filter is not None else max_depth
        if requested is None or requested > limit:
            raise TruncatedRange(
                f"сомножители сгенерированы только до глубины {limit}; "
                "задайте вес или max_depth в этих пределах"
            )

    found: dict[Weight, list[TensorLabel]] = {}
    for weight, labels in tensor.labels_by_weight().items():
        if weight_filter is not None and weight != weight_filter:
            continue
        if max_depth is not None and _depth_of(weight) > max_depth:
            continue
        hw = [label for label in labels if tensor.is_highest_weight(label)]
        if hw:
            found[weight] = hw
    return found


def _depth_of(weight: Weight) -> int:
    return sum(weight.roots)


# -- разложение --

@dataclass(frozen=True)
class Component:
    """Связная компонента тензорного кристалла."""

    hw_label: TensorLabel
    hw_weight: Weight
    size: int
    is_cartan: bool


@dataclass(frozen=True)
class Decomposition:
    cartan: CartanData
    components: tuple[Component, ...]

    def multiplicities(self) -> dict[tuple[int, ...], int]:
        """Метки Дынкина старшего веса -> кратность."""
        result: dict[tuple[int, ...], int] = {}
        for comp in self.components:
            key = comp.hw_weight.dynkin(self.cartan)
            result[key] = result.get(key, 0) + 1
        return dict(sorted(result.items(), reverse=True))

    @property
    def cartan_component(self) -> Component:
        return next(c for c in self.components if c.is_cartan)

    def total_size(self) -> int:
        return sum(c.size for c in self.components)

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {
                "hw_weight": list(c.hw_weight.dynkin(self.cartan)),
                "size": c.size,
                "is_cartan": c.is_cartan,
            }
            for c in self.components
        ]


def decompose(tensor: TensorCrystal) -> Decomposition:
    """Компоненты связности графа {e_i, f_i}; компонента 𝕍 -- картановская."""
    if tensor.truncated:
        raise TruncatedRange("разложение требует полных (неусечённых) сомножителей")

    graph = nx.Graph()
    graph.add_nodes_from(tensor.elements())
    for label in tensor.elements():
        for i in tensor.index_set:
            target = tensor_f(tensor, label, i)
            if target is not None:
                graph.add_edge(label, target, color=i)

    top = tensor.highest_weight_element
    components = []
    for nodes in nx.connected_components(graph):
        hw = sorted(label for label in nodes if tensor.is_highest_weight(label))
        if len(hw) != 1:
            raise InvariantViolation(
                f"компонента размера {len(nodes)} содержит {len(hw)} старших меток"
            )
        components.append(Component(
            hw_label=hw[0],
            hw_weight=tensor.weight(hw[0]),
            size=len(nodes),
            is_cartan=top in nodes,
        ))
    components.sort(key=lambda c: (not c.is_cartan, c.hw_weight.sort_key(), c.hw_label))
    result = Decomposition(tensor.cartan, tuple(components))
    logger.info(
        "Разложение %r: %s",
        tensor,
        ", ".join(f"{list(k)}×{v}" for k, v in result.multiplicities().items()),
    )
    return result


# -- монотонность h₋,ℓ --

@dataclass(frozen=True)
class ClauseViolation:
    label: TensorLabel
    ell: int
    j: int
    clause: int
    detail: str


def h_minus_clause_violations(tensor: TensorCrystal, i: int) -> list[ClauseViolation]:
    """Проверить три утверждения о монотонности h₋,ℓ на всех метках.

    Для λ с h₋,ℓ(λ) > h₋,ℓ₊₁(λ) понижаем ℓ-й сомножитель f_i, затем поднимаем
    любой j-й сомножитель e_i и сравниваем h₋,ℓ результата с h₋,ℓ(λ).
    """
    violations = []
    for label in tensor.elements():
        profile = h_minus_profile(tensor, label, i)
        for ell in range(1, tensor.n + 1):
            if profile[ell - 1] <= profile[ell]:
                continue
            lowered = tensor.factors[ell - 1].f(label[ell - 1], i)
            if lowered is None:
                continue
            mu_bar = label.replace(ell - 1, lowered)
            base = profile[ell - 1]
            for j in range(1, tensor.n + 1):
                raised = tensor.factors[j - 1].e(mu_bar[j - 1], i)
                if raised is None:
                    continue
                mu_prime = mu_bar.replace(j - 1, raised)
                value = h_minus_from(tensor, mu_prime, i, ell)
                if j < ell and value != base - 1:
                    violations.append(ClauseViolation(
                        label, ell, j, 1, f"ожидалось {base - 1}, получено {value}",
                    ))
                elif j == ell and mu_prime != label and value <= base:
                    violations.append(ClauseViolation(
                        label, ell, j, 2, f"ожидалось > {base}, получено {value}",
                    ))
                elif j > ell and value <= base:
                    violations.append(ClauseViolation(
                        label, ell, j, 3, f"ожидалось > {base}, получено {value}",
                    ))
    if violations:
        logger.warning("Найдено нарушений монотонности h₋: %d", len(violations))
    return violations
