"""Подкоманда string-param: строковая параметризация метки."""

from __future__ import annotations

from typing import Any

from kac_crystals.commands.base import (
    CARTAN_ARG,
    DEPTH_ARG,
    HW_ARG,
    LABEL_ARG,
    STRING_ARG,
    WORD_ARG,
    BaseCommand,
)
from kac_crystals.commands.parsing import build_factors, parse_word, resolve_label
from kac_crystals.core.types import CommandResult, JobConfig
from kac_crystals.crystals.strings import reconstruct, string_parametrization
from kac_crystals.crystals.tensor import build_tensor


class StringParamCommand(BaseCommand):
    name = "string-param"
    description = "Показатели a_k исчерпания ẽ по слову i_1, i_2, ... для метки."
    parameters = {
        "cartan": CARTAN_ARG,
        "hw": HW_ARG,
        "depth": DEPTH_ARG,
        "label": LABEL_ARG,
        "string": STRING_ARG,
        "word": WORD_ARG,
        "step_budget": {"type": int, "help": "предел числа шагов (защита от зацикливания)"},
    }

    def execute(self, job: JobConfig, settings: dict[str, Any]) -> CommandResult:
        cartan, _, graphs = build_factors(job, settings)
        tensor = build_tensor(graphs)
        word = parse_word(job.word, cartan)
        label = resolve_label(tensor, job.label, job.string, word)
        param = string_parametrization(tensor, label, word, step_budget=job.step_budget)
        restored = reconstruct(tensor, param) == label
        origin_weight = list(tensor.weight(param.origin).dynkin(cartan))
        payload = {
            "word": str(param.word),
            "exponents": list(param.exponents),
            "string": param.to_text(),
            "component_hw": origin_weight,
            "reconstructs": restored,
        }
        text = f"слово {param.word}: ({', '.join(map(str, param.exponents))})"
        text += f"\nстарший вес компоненты: ({','.join(map(str, origin_weight))})"
        if not restored:
            text += "\nвнимание: обратное применение f̃ не восстанавливает метку"
        return self._ok(payload, text)
