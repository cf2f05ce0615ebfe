"""Подкоманда decompose: разложение тензорного произведения на компоненты."""

from __future__ import annotations

from typing import Any

from kac_crystals.commands.base import CARTAN_ARG, DEPTH_ARG, HW_ARG, BaseCommand
from kac_crystals.commands.parsing import build_factors
from kac_crystals.core.types import CommandResult, JobConfig
from kac_crystals.crystals.tensor import build_tensor, decompose


class DecomposeCommand(BaseCommand):
    name = "decompose"
    description = "Разложить B(ν_1) ⊗ ... ⊗ B(ν_n) на связные компоненты B(μ)."
    parameters = {"cartan": CARTAN_ARG, "hw": HW_ARG, "depth": DEPTH_ARG}

    def execute(self, job: JobConfig, settings: dict[str, Any]) -> CommandResult:
        cartan, hws, graphs = build_factors(job, settings)
        tensor = build_tensor(graphs)
        decomposition = decompose(tensor)
        multiplicities = decomposition.multiplicities()
        payload = {
            "factors": [list(hw) for hw in hws],
            "size": len(tensor),
            "components": decomposition.to_json(),
            "multiplicities": [
                {"hw": list(hw), "count": count} for hw, count in multiplicities.items()
            ],
        }
        cartan_hw = decomposition.cartan_component.hw_weight.dynkin(cartan)
        lines = [f"{' ⊗ '.join(f'B({_fmt(hw)})' for hw in hws)} над {cartan}, {len(tensor)} меток"]
        for hw, count in multiplicities.items():
            lines.append(f"  B({_fmt(hw)}) × {count}")
        lines.append(f"картановская компонента: B({_fmt(cartan_hw)})")
        return self._ok(payload, "\n".join(lines))


def _fmt(hw) -> str:
    return ",".join(map(str, hw))
