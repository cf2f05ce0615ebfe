"""Набор проверок инвариантов для заданных данных Картана и старших весов.

Каждая проверка возвращает список описаний нарушений; пустой список -- успех.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Sequence

from kac_crystals.algebra.cartan import CartanData
from kac_crystals.core.errors import InvariantViolation
from kac_crystals.core.types import CartanKind
from kac_crystals.crystals.base import BaseCrystal
from kac_crystals.crystals.characters import (
    character,
    cyclotomic_dot_dimension,
    weyl_dimension,
)
from kac_crystals.crystals.graph import CrystalGraph, generate_crystal
from kac_crystals.crystals.stembridge import verify_stembridge
from kac_crystals.crystals.strings import reconstruct, string_parametrization
from kac_crystals.crystals.tensor import (
    TensorCrystal,
    TensorLabel,
    build_tensor,
    decompose,
    flatten_label,
    h_minus_clause_violations,
    h_minus_profile,
    h_stats,
    i_signature,
    reduce_signature,
    reduce_signature_by_scan,
    tensor_e,
    tensor_f,
)

logger = logging.getLogger(__name__)


@dataclass
class CheckOutcome:
    name: str
    violations: list[str] = field(default_factory=list)
    skipped: str | None = None

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class SuiteReport:
    outcomes: list[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    @property
    def violation_count(self) -> int:
        return sum(len(o.violations) for o in self.outcomes)

    def to_json(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "checks": [
                {
                    "name": o.name,
                    "passed": o.passed,
                    "skipped": o.skipped,
                    "violations": o.violations[:20],
                    "violation_count": len(o.violations),
                }
                for o in self.outcomes
            ],
        }

    def to_text(self) -> str:
        lines = []
        for o in self.outcomes:
            if o.skipped:
                status = f"SKIP ({o.skipped})"
            else:
                status = "OK" if o.passed else f"FAIL ({len(o.violations)})"
            lines.append(f"{o.name}: {status}")
            lines.extend(f"  {v}" for v in o.violations[:5])
        lines.append("итог: " + ("все проверки пройдены" if self.passed else "есть нарушения"))
        return "\n".join(lines)


# -- проверки отдельного кристалла --

def check_crystal_axioms(crystal: BaseCrystal) -> list[str]:
    """Симметрия рёбер, шаг веса, φ − ε = <wt, α^∨>, ε/φ = максимальные степени."""
    cartan = crystal.cartan
    problems = []
    for b in crystal.elements():
        weight = crystal.weight(b)
        for i in cartan.index_set:
            eps, phi = crystal.epsilon(b, i), crystal.phi(b, i)
            pairing = weight.pairing(cartan, i)
            if phi - eps != pairing:
                problems.append(f"{_short(b)}: φ_{i} − ε_{i} = {phi - eps} ≠ {pairing}")
            lowered = crystal.f(b, i)
            if lowered is not None:
                if crystal.e(lowered, i) != b:
                    problems.append(f"{_short(b)}: e_{i} f_{i} b ≠ b")
                if crystal.weight(lowered) != weight.minus_root(i):
                    problems.append(f"{_short(b)}: wt(f_{i} b) ≠ wt(b) − α_{i}")
            raised = crystal.e(b, i)
            if raised is not None and crystal.f(raised, i) != b:
                problems.append(f"{_short(b)}: f_{i} e_{i} b ≠ b")
            if not crystal.truncated:
                if _run_length(crystal.e, b, i) != eps:
                    problems.append(f"{_short(b)}: ε_{i} ≠ длина e-цепочки")
                if _run_length(crystal.f, b, i) != phi:
                    problems.append(f"{_short(b)}: φ_{i} ≠ длина f-цепочки")
    return problems


def check_weyl_dimension(graph: CrystalGraph) -> list[str]:
    expected = weyl_dimension(graph.cartan, graph.hw)
    if len(graph) != expected:
        return [f"|B({list(graph.hw)})| = {len(graph)}, формула Вейля даёт {expected}"]
    return []


def check_reflection_invariance(crystal: BaseCrystal) -> list[str]:
    if not character(crystal).is_reflection_invariant():
        return ["характер не инвариантен относительно простых отражений"]
    return []


def check_string_reconstruction(crystal: BaseCrystal, step_budget: int = 100_000) -> list[str]:
    problems = []
    for b in crystal.elements():
        param = string_parametrization(crystal, b, step_budget=step_budget)
        if reconstruct(crystal, param) != b:
            problems.append(f"{_short(b)}: параметризация {param.exponents} не восстанавливает")
    return problems


def check_json_roundtrip(graph: CrystalGraph) -> list[str]:
    restored = CrystalGraph.from_json(graph.to_json())
    problems = []
    if restored.canonical_keys() != graph.canonical_keys():
        problems.append("ключи вершин после импорта отличаются")
    if sorted(restored.edges()) != sorted(graph.edges()):
        problems.append("рёбра после импорта отличаются")
    return problems


# -- проверки тензорного произведения --

def check_signature_rule(tensor: TensorCrystal) -> list[str]:
    """h₊/h₋ равны числам применимых e/f; e переворачивает самый правый +."""
    problems = []
    for label in tensor.elements():
        for i in tensor.index_set:
            h_plus, h_minus = h_stats(tensor, label, i)
            if _run_length(tensor.e, label, i) != h_plus:
                problems.append(f"{_short(label)}: h₊ ≠ число применений e_{i}")
            if _run_length(tensor.f, label, i) != h_minus:
                problems.append(f"{_short(label)}: h₋ ≠ число применений f_{i}")
            raised = tensor_e(tensor, label, i)
            if raised is not None and h_stats(tensor, raised, i) != (h_plus - 1, h_minus + 1):
                problems.append(f"{_short(label)}: e_{i} не переворачивает + в −")
            lowered = tensor_f(tensor, label, i)
            if lowered is not None:
                if tensor_e(tensor, lowered, i) != label:
                    problems.append(f"{_short(label)}: e_{i} f_{i} λ ≠ λ")
                changed = [j for j in range(tensor.n) if lowered[j] != label[j]]
                if len(changed) != 1:
                    problems.append(f"{_short(label)}: f_{i} меняет {len(changed)} сомножителей")
                elif tensor.weight(lowered) != tensor.weight(label).minus_root(i):
                    problems.append(f"{_short(label)}: wt(f_{i} λ) ≠ wt(λ) − α_{i}")
    return problems


def check_two_factor_rule(tensor: TensorCrystal) -> list[str]:
    """При n = 2: e_i действует на b_2 тогда и только тогда, когда ε_i(b_2) > φ_i(b_1)."""
    if tensor.n != 2:
        return []
    left, right = tensor.factors
    problems = []
    for label in tensor.elements():
        b1, b2 = label.factors
        for i in tensor.index_set:
            if right.epsilon(b2, i) > left.phi(b1, i):
                expected = label.replace(1, right.e(b2, i))
            else:
                raised = left.e(b1, i)
                expected = None if raised is None else label.replace(0, raised)
            if tensor_e(tensor, label, i) != expected:
                problems.append(f"{_short(label)}: правило двух сомножителей для e_{i}")
            if left.phi(b1, i) > right.epsilon(b2, i):
                expected = label.replace(0, left.f(b1, i))
            else:
                lowered = right.f(b2, i)
                expected = None if lowered is None else label.replace(1, lowered)
            if tensor_f(tensor, label, i) != expected:
                problems.append(f"{_short(label)}: правило двух сомножителей для f_{i}")
    return problems


def check_reduction_confluence(
    tensor: TensorCrystal, rng: random.Random, samples: int,
) -> list[str]:
    labels = tensor.elements()
    problems = []
    for _ in range(samples):
        label = rng.choice(labels)
        i = rng.choice(tensor.index_set)
        signature = i_signature(tensor, label, i)
        expected = reduce_signature(signature).crossed
        if reduce_signature_by_scan(signature, rng.choice).crossed != expected:
            problems.append(f"{_short(label)}: зачёркивание зависит от порядка: {signature.flat()}")
    return problems


def check_h_minus_monotone(tensor: TensorCrystal) -> list[str]:
    problems = []
    for label in tensor.elements():
        for i in tensor.index_set:
            profile = h_minus_profile(tensor, label, i)
            if any(a < b for a, b in zip(profile, profile[1:])):
                problems.append(f"{_short(label)}: h₋,k не убывает: {profile}")
    return problems


def check_h_minus_clauses(tensor: TensorCrystal) -> list[str]:
    return [
        f"{_short(v.label)}: ℓ={v.ell}, j={v.j}, утверждение {v.clause}: {v.detail}"
        for i in tensor.index_set
        for v in h_minus_clause_violations(tensor, i)
    ]


def check_tensor_character(tensor: TensorCrystal) -> list[str]:
    product = character(tensor.factors[0])
    for factor in tensor.factors[1:]:
        product = product * character(factor)
    if character(tensor) != product:
        return ["характер тензорного произведения ≠ свёртке характеров"]
    return []


def check_decomposition(tensor: TensorCrystal) -> list[str]:
    try:
        decomposition = decompose(tensor)
    except InvariantViolation as exc:
        return [str(exc)]
    problems = []
    if decomposition.total_size() != len(tensor):
        problems.append("сумма размеров компонент ≠ числу меток")
    if sum(1 for c in decomposition.components if c.is_cartan) != 1:
        problems.append("картановская компонента не единственна")
    if tensor.cartan.kind is CartanKind.FINITE:
        for comp in decomposition.components:
            dim = weyl_dimension(tensor.cartan, comp.hw_weight.dynkin(tensor.cartan))
            if dim != comp.size:
                problems.append(f"компонента {comp.hw_weight}: размер {comp.size} ≠ {dim}")
        total = character(decomposition_sum(tensor, decomposition))
        if total != character(tensor):
            problems.append("Σ характеров компонент ≠ характеру произведения")
    return problems


def decomposition_sum(tensor: TensorCrystal, decomposition) -> BaseCrystal:
    """Прямая сумма B(hw) по компонентам, как один кристалл для сравнения характеров."""
    graphs = [
        generate_crystal(tensor.cartan, comp.hw_weight.dynkin(tensor.cartan))
        for comp in decomposition.components
    ]
    return _DirectSum(tensor.cartan, graphs)


def check_associativity(factors: Sequence[BaseCrystal]) -> list[str]:
    """(B1⊗B2)⊗B3 и B1⊗(B2⊗B3) действуют одинаково после развёртки меток."""
    b1, b2, b3 = factors[:3]
    flat = build_tensor([b1, b2, b3])
    left = build_tensor([build_tensor([b1, b2]), b3])
    right = build_tensor([b1, build_tensor([b2, b3])])
    problems = []
    for nested in (left, right):
        for label in nested.elements():
            key = flatten_label(label)
            for i in flat.index_set:
                for op in ("e", "f"):
                    a = getattr(nested, op)(label, i)
                    b = getattr(flat, op)(TensorLabel(key), i)
                    got = None if a is None else flatten_label(a)
                    want = None if b is None else flatten_label(b)
                    if got != want:
                        problems.append(f"{op}_{i} на {_short(label)}: {got} ≠ {want}")
    return problems


class _DirectSum(BaseCrystal):
    """Несвязная сумма кристаллов; элементы -- пары (номер слагаемого, элемент)."""

    def __init__(self, cartan: CartanData, parts: Sequence[BaseCrystal]) -> None:
        self.cartan = cartan
        self.parts = list(parts)

    def elements(self):
        return [(k, b) for k, part in enumerate(self.parts) for b in part.elements()]

    def weight(self, b):
        return self.parts[b[0]].weight(b[1])

    def epsilon(self, b, i):
        return self.parts[b[0]].epsilon(b[1], i)

    def phi(self, b, i):
        return self.parts[b[0]].phi(b[1], i)

    def e(self, b, i):
        raised = self.parts[b[0]].e(b[1], i)
        return None if raised is None else (b[0], raised)

    def f(self, b, i):
        lowered = self.parts[b[0]].f(b[1], i)
        return None if lowered is None else (b[0], lowered)

    @property
    def highest_weight_element(self):
        return (0, self.parts[0].highest_weight_element)

    @property
    def truncated(self) -> bool:
        return any(p.truncated for p in self.parts)

    def contains(self, b) -> bool:
        return 0 <= b[0] < len(self.parts) and self.parts[b[0]].contains(b[1])


# -- сборка --

def run_suite(
    cartan: CartanData,
    hws: Sequence[Sequence[int]],
    *,
    depth_cutoff: int | None = None,
    seed: int = 0,
    samples: int = 200,
    step_budget: int = 100_000,
) -> SuiteReport:
    """Все применимые проверки для кристаллов B(ν_1), ..., B(ν_n) и их произведения."""
    rng = random.Random(seed)
    report = SuiteReport()
    graphs = [generate_crystal(cartan, hw, depth_cutoff) for hw in hws]
    complete = not any(g.truncated for g in graphs)
    finite = cartan.kind is CartanKind.FINITE

    def run(name: str, check: Callable[[], list[str]], skip: str | None = None) -> None:
        if skip:
            report.outcomes.append(CheckOutcome(name, skipped=skip))
            return
        outcome = CheckOutcome(name, check())
        logger.info("Проверка %s: %s", name, "OK" if outcome.passed else "нарушения")
        report.outcomes.append(outcome)

    not_complete = None if complete else "усечённые кристаллы"
    not_finite = None if finite else "не конечный тип"

    for k, graph in enumerate(graphs, start=1):
        run(f"B{k}: аксиомы кристалла", lambda g=graph: check_crystal_axioms(g))
        run(f"B{k}: JSON round-trip", lambda g=graph: check_json_roundtrip(g))
        run(
            f"B{k}: формула Вейля", lambda g=graph: check_weyl_dimension(g),
            not_finite or not_complete,
        )
        run(
            f"B{k}: W-инвариантность характера", lambda g=graph: check_reflection_invariance(g),
            not_finite or not_complete,
        )
        run(
            f"B{k}: аксиомы Стембриджа",
            lambda g=graph: [
                f"{v.axiom} (i={v.i}, j={v.j}) {_short(v.node)}: {v.detail}"
                for v in verify_stembridge(g).violations
            ],
            not_complete or (None if cartan.is_simply_laced else "не simply-laced"),
        )
        run(
            f"B{k}: строковая параметризация",
            lambda g=graph: check_string_reconstruction(g, step_budget),
            not_complete,
        )

    tensor = build_tensor(graphs)
    run("⊗: аксиомы кристалла", lambda: check_crystal_axioms(tensor), not_complete)
    run("⊗: правило сигнатуры", lambda: check_signature_rule(tensor), not_complete)
    run(
        "⊗: правило двух сомножителей", lambda: check_two_factor_rule(tensor),
        not_complete or (None if tensor.n == 2 else "n ≠ 2"),
    )
    run(
        "⊗: независимость зачёркивания от порядка",
        lambda: check_reduction_confluence(tensor, rng, samples),
        not_complete,
    )
    run("⊗: монотонность h₋,k", lambda: check_h_minus_monotone(tensor), not_complete)
    run("⊗: утверждения о h₋,ℓ", lambda: check_h_minus_clauses(tensor), not_complete)
    run("⊗: характер", lambda: check_tensor_character(tensor), not_complete)
    run("⊗: разложение", lambda: check_decomposition(tensor), not_complete)
    run(
        "⊗: строковая параметризация",
        lambda: check_string_reconstruction(tensor, step_budget),
        not_complete,
    )
    run(
        "⊗: ассоциативность", lambda: check_associativity(graphs),
        not_complete or (None if len(graphs) >= 3 else "n < 3"),
    )
    run("φ_i(𝕍) = α_i^∨(ν)", lambda: _check_dot_dimensions(cartan, hws))
    return report


def _check_dot_dimensions(cartan: CartanData, hws: Sequence[Sequence[int]]) -> list[str]:
    problems = []
    for i in cartan.index_set:
        try:
            cyclotomic_dot_dimension(cartan, hws, i)
        except InvariantViolation as exc:
            problems.append(str(exc))
    return problems


def _run_length(op: Callable[[Any, int], Any], b: Hashable, i: int, limit: int = 10_000) -> int:
    count = 0
    while (b := op(b, i)) is not None:
        count += 1
        if count > limit:
            break
    return count


def _short(b: Hashable) -> str:
    text = repr(b)
    return text if len(text) <= 60 else text[:57] + "..."
