"""Подкоманда tensor-op: применить ẽ_i или f̃_i к метке тензорного кристалла."""

from __future__ import annotations

from typing import Any

from kac_crystals.commands.base import (
    CARTAN_ARG,
    DEPTH_ARG,
    HW_ARG,
    I_ARG,
    LABEL_ARG,
    STRING_ARG,
    WORD_ARG,
    BaseCommand,
)
from kac_crystals.commands.parsing import (
    UsageError,
    build_factors,
    describe_label,
    label_text,
    parse_word,
    require,
    resolve_label,
)
from kac_crystals.core.types import CommandResult, JobConfig
from kac_crystals.crystals.tensor import build_tensor, tensor_e, tensor_f


class TensorOpCommand(BaseCommand):
    name = "tensor-op"
    description = "Применить ẽ_i или f̃_i к метке (b_1, ..., b_n) по правилу сигнатуры."
    parameters = {
        "cartan": CARTAN_ARG,
        "hw": HW_ARG,
        "depth": DEPTH_ARG,
        "label": LABEL_ARG,
        "string": STRING_ARG,
        "word": WORD_ARG,
        "i": I_ARG,
        "op": {"choices": ["e", "f"], "help": "оператор: e (повышающий) или f (понижающий)"},
    }

    def execute(self, job: JobConfig, settings: dict[str, Any]) -> CommandResult:
        cartan, _, graphs = build_factors(job, settings)
        i = require(job.i, "--i")
        op = require(job.op, "--op")
        if i not in cartan.index_set:
            raise UsageError("--i", f"вершина {i} вне 0..{cartan.rank - 1}")
        tensor = build_tensor(graphs)
        word = parse_word(job.word, cartan)
        label = resolve_label(tensor, job.label, job.string, word)
        result = (tensor_e if op == "e" else tensor_f)(tensor, label, i)

        before = describe_label(tensor, label, word)
        after = None if result is None else describe_label(tensor, result, word)
        changed = None
        if result is not None:
            changed = next(j for j in range(tensor.n) if result[j] != label[j]) + 1
        payload = {
            "op": op,
            "i": i,
            "label": before,
            "result": after,
            "changed_factor": changed,
        }
        arrow = f"{op}̃_{i}"
        if after is None:
            text = f"{arrow} {label_text(before)} = 0"
        else:
            text = (
                f"{arrow} {label_text(before)}\n  = {label_text(after)}"
                f"\n  (изменён сомножитель {changed})"
            )
        return self._ok(payload, text)
