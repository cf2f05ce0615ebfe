"""Подкоманда compare: порядок доминирования, обратный порядок на кортежах, порядок показателей."""

from __future__ import annotations

from typing import Any

from kac_crystals.algebra.weights import (
    Weight,
    WeightTuple,
    dominance_leq,
    inverse_dominance_compare,
)
from kac_crystals.commands.base import CARTAN_ARG, WORD_ARG, BaseCommand
from kac_crystals.commands.parsing import (
    parse_cartan,
    parse_string_param,
    parse_weights,
    parse_word,
    require,
)
from kac_crystals.core.types import CommandResult, JobConfig, Ordering
from kac_crystals.crystals.strings import compare_exponent_sequences

_SIDE_HELP = (
    "dominance: вес в метках Дынкина; inverse-dominance: кортеж весов через ';'; "
    "exponents: показатели 'a.b.c'"
)


class CompareCommand(BaseCommand):
    name = "compare"
    description = "Сравнить два элемента: dominance, inverse-dominance или exponents."
    parameters = {
        "mode": {"choices": ["dominance", "inverse-dominance", "exponents"], "help": "порядок"},
        "cartan": CARTAN_ARG,
        "left": {"help": _SIDE_HELP},
        "right": {"help": _SIDE_HELP},
        "word": WORD_ARG,
    }

    def execute(self, job: JobConfig, settings: dict[str, Any]) -> CommandResult:
        mode = require(job.mode, "--mode")
        if mode == "exponents":
            return self._compare_exponents(job)
        cartan = parse_cartan(job.cartan)
        if mode == "dominance":
            left = Weight.from_dynkin(parse_weights(job.left, cartan, "--left", 1)[0])
            right = Weight.from_dynkin(parse_weights(job.right, cartan, "--right", 1)[0])
            leq = dominance_leq(left, right, cartan)
            geq = dominance_leq(right, left, cartan)
            ordering = _from_verdicts(bool(leq), bool(geq))
            reason = leq.reason or geq.reason
            payload = {
                "mode": mode,
                "ordering": ordering.value,
                "leq": leq.holds,
                "geq": geq.holds,
                "reason": reason,
            }
            text = f"{ordering.value}" + (f" ({reason})" if reason else "")
            return self._ok(payload, text)

        left_tuple = _weight_tuple(cartan, parse_weights(job.left, cartan, "--left"))
        right_tuple = _weight_tuple(cartan, parse_weights(job.right, cartan, "--right"))
        ordering = inverse_dominance_compare(left_tuple, right_tuple)
        return self._ok({"mode": mode, "ordering": ordering.value}, ordering.value)

    def _compare_exponents(self, job: JobConfig) -> CommandResult:
        word = parse_word(job.word)
        left = parse_string_param(require(job.left, "--left"), word, "--left")
        right = parse_string_param(require(job.right, "--right"), word, "--right")
        ordering = compare_exponent_sequences(left, right)
        payload = {"mode": "exponents", "word": str(word), "ordering": ordering.value}
        return self._ok(payload, ordering.value)


def _from_verdicts(leq: bool, geq: bool) -> Ordering:
    if leq and geq:
        return Ordering.EQUAL
    if leq:
        return Ordering.LESS
    if geq:
        return Ordering.GREATER
    return Ordering.INCOMPARABLE


def _weight_tuple(cartan, weights) -> WeightTuple:
    return WeightTuple(cartan, tuple(Weight.from_dynkin(w) for w in weights))
