"""Подкоманда verify: полный набор проверок инвариантов."""

from __future__ import annotations

from typing import Any

from kac_crystals.commands.base import CARTAN_ARG, DEPTH_ARG, HW_ARG, BaseCommand
from kac_crystals.commands.parsing import depth_for, parse_cartan, parse_hws
from kac_crystals.core.errors import InvariantViolation
from kac_crystals.core.types import CommandResult, JobConfig
from kac_crystals.verification.suite import run_suite


class VerifyCommand(BaseCommand):
    name = "verify"
    description = "Проверить аксиомы кристаллов, правило сигнатуры, характеры и разложение."
    parameters = {
        "cartan": CARTAN_ARG,
        "hw": HW_ARG,
        "depth": DEPTH_ARG,
        "seed": {"type": int, "help": "зерно случайных проверок (по умолчанию из конфига)"},
        "samples": {"type": int, "help": "число случайных проб"},
        "step_budget": {"type": int, "help": "предел шагов строковой параметризации"},
    }

    def execute(self, job: JobConfig, settings: dict[str, Any]) -> CommandResult:
        cartan = parse_cartan(job.cartan)
        hws = parse_hws(job.hw, cartan)
        defaults = settings.get("verification", {})
        seed = job.seed if job.seed is not None else int(defaults.get("seed", 0))
        samples = job.samples if job.samples is not None else int(defaults.get("samples", 200))

        report = run_suite(
            cartan,
            hws,
            depth_cutoff=depth_for(job, cartan, settings),
            seed=seed,
            samples=samples,
            step_budget=job.step_budget,
        )
        payload = report.to_json()
        payload["seed"] = seed
        if not report.passed:
            error = InvariantViolation(f"нарушений: {report.violation_count}")
            return self._fail(error, payload, report.to_text())
        return self._ok(payload, report.to_text())
