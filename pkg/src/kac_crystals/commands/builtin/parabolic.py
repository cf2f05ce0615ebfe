"""Подкоманда parabolic: метки параболической категории 𝒪 и их тензорные метки."""

from __future__ import annotations

from typing import Any

from kac_crystals.commands.base import BaseCommand
from kac_crystals.commands.parsing import parse_ints, require
from kac_crystals.core.types import CommandResult, JobConfig
from kac_crystals.typea.parabolic import parabolic_bijection, parabolic_labels


class ParabolicCommand(BaseCommand):
    name = "parabolic"
    description = "Кортежи строго убывающих блоков из 1..m и их образы в тензорном кристалле."
    parameters = {
        "m": {"type": int, "help": "ранг sl_m"},
        "blocks": {"help": "размеры блоков через запятую: '2,1'"},
    }

    def execute(self, job: JobConfig, settings: dict[str, Any]) -> CommandResult:
        m = require(job.m, "--m")
        blocks = parse_ints(require(job.blocks, "--blocks"), "--blocks")
        labels = parabolic_labels(m, blocks)
        tensor, mapping = parabolic_bijection(labels)

        payload = labels.to_json()
        payload["expected_count"] = labels.expected_count
        payload["tensor_size"] = len(tensor)
        payload["weights"] = [list(labels.label_weight(label)) for label in labels.labels]
        payload["bijective"] = len(set(mapping.values())) == len(tensor) == labels.count

        lines = [
            f"sl_{m}, блоки {list(blocks)}: {labels.count} меток, "
            f"|B(ω_{{m_1}}) ⊗ ... ⊗ B(ω_{{m_n}})| = {len(tensor)}",
        ]
        for label in labels.labels:
            blocks_text = " | ".join(",".join(map(str, b)) for b in label)
            weight = ",".join(map(str, labels.label_weight(label)))
            lines.append(f"  {blocks_text}  вес ({weight})")
        return self._ok(payload, "\n".join(lines))
