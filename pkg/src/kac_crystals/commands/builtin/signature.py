"""Подкоманда signature: i-сигнатура метки и её редукция."""

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
    parse_word,
    require,
    resolve_label,
)
from kac_crystals.core.types import CommandResult, JobConfig
from kac_crystals.crystals.tensor import (
    build_tensor,
    h_minus_profile,
    i_signature,
    reduce_signature,
)


class SignatureCommand(BaseCommand):
    name = "signature"
    description = "Показать i-сигнатуру метки, зачёркнутые пары и сомножители действия ẽ_i, f̃_i."
    parameters = {
        "cartan": CARTAN_ARG,
        "hw": HW_ARG,
        "depth": DEPTH_ARG,
        "label": LABEL_ARG,
        "string": STRING_ARG,
        "word": WORD_ARG,
        "i": I_ARG,
    }

    def execute(self, job: JobConfig, settings: dict[str, Any]) -> CommandResult:
        cartan, _, graphs = build_factors(job, settings)
        i = require(job.i, "--i")
        if i not in cartan.index_set:
            raise UsageError("--i", f"вершина {i} вне 0..{cartan.rank - 1}")
        tensor = build_tensor(graphs)
        label = resolve_label(tensor, job.label, job.string, parse_word(job.word, cartan))

        signature = i_signature(tensor, label, i)
        reduced = reduce_signature(signature)
        e_pos, f_pos = reduced.rightmost_plus, reduced.leftmost_minus
        e_factor = None if e_pos is None else reduced.group_of(e_pos) + 1
        f_factor = None if f_pos is None else reduced.group_of(f_pos) + 1
        profile = h_minus_profile(tensor, label, i)[:-1]

        payload = {
            "i": i,
            "groups": [list(g) for g in signature.groups],
            "signature": signature.flat(),
            "grouped": signature.grouped(),
            "rendered": reduced.render(),
            "crossed_positions": reduced.crossed_positions(),
            "reduced": reduced.reduced_form(),
            "h_plus": reduced.h_plus,
            "h_minus": reduced.h_minus,
            "e_factor": e_factor,
            "f_factor": f_factor,
            "h_minus_from": profile,
        }
        crossed = ",".join(map(str, reduced.crossed_positions())) or "нет"
        lines = [
            f"{signature.grouped()} = ({signature.flat()})",
            f"редукция: {reduced.render()}",
            f"зачёркнуты позиции: {crossed}",
            f"h₊ = {reduced.h_plus}, h₋ = {reduced.h_minus}",
            f"ẽ_{i}: " + (f"сомножитель {e_factor}" if e_factor else "0"),
            f"f̃_{i}: " + (f"сомножитель {f_factor}" if f_factor else "0"),
            "h₋,k: " + ", ".join(f"k={k}: {h}" for k, h in enumerate(profile, start=1)),
        ]
        return self._ok(payload, "\n".join(lines))
