"""Подкоманда condense: конденсация разбиения по диагоналям вычета r (mod p)."""

from __future__ import annotations

from math import comb
from typing import Any

from kac_crystals.commands.base import BaseCommand
from kac_crystals.commands.parsing import UsageError, require
from kac_crystals.core.types import CommandResult, JobConfig
from kac_crystals.typea.partitions import Partition, residue_class, residue_condense

# перебор класса ∼_r идёт по всем разбиениям в прямоугольнике
_CLASS_SEARCH_LIMIT = 200_000


class CondenseCommand(BaseCommand):
    name = "condense"
    description = "Отмеченные клетки разбиения и сомножители ⋀^{m_k} 𝕂^p для вычета r (mod p)."
    parameters = {
        "partition": {"help": "части через запятую: '7,5,1,1,1,1,1' или '7,5,1^5'"},
        "p": {"type": int, "help": "модуль p >= 2"},
        "r": {"type": int, "help": "вычет 0..p-1"},
    }

    def execute(self, job: JobConfig, settings: dict[str, Any]) -> CommandResult:
        text = require(job.partition, "--partition")
        p, r = require(job.p, "--p"), require(job.r, "--r")
        try:
            partition = Partition.parse(text)
        except ValueError as e:
            raise UsageError("--partition", str(e)) from None

        profile = residue_condense(partition, p, r)
        payload = profile.to_json()
        payload["nontrivial_factors"] = [str(f) for f in profile.nontrivial_factors]

        rows, cols = -profile.contents[0], profile.contents[-1]
        class_size = None
        if comb(rows + cols, rows) <= _CLASS_SEARCH_LIMIT:
            class_size = len(residue_class(partition, p, r))
        payload["class_size"] = class_size

        boxes = " ".join(f"({x},{y})" for x, y in profile.marked_boxes)
        lines = [
            f"{partition}, p={p}, r={r}",
            f"отмеченные клетки: {boxes}",
            f"m = ({', '.join(map(str, profile.m))})",
            f"сомножители: {profile.factors_text()}",
            f"размерность: {profile.dimension}",
        ]
        if class_size is not None:
            lines.append(f"размер класса ∼_{r}: {class_size}")
        return self._ok(payload, "\n".join(lines))
