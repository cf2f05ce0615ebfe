"""Подкоманда crystal: генерация и экспорт B(ν)."""

from __future__ import annotations

from typing import Any

from kac_crystals.commands.base import CARTAN_ARG, DEPTH_ARG, HW_ARG, BaseCommand
from kac_crystals.commands.parsing import UsageError, build_factors
from kac_crystals.core.types import CommandResult, JobConfig
from kac_crystals.crystals.graph import CrystalGraph


class CrystalCommand(BaseCommand):
    name = "crystal"
    description = "Построить граф кристалла B(ν) и экспортировать его (json, dot, text)."
    parameters = {"cartan": CARTAN_ARG, "hw": HW_ARG, "depth": DEPTH_ARG}
    formats = ("json", "dot", "text")

    def execute(self, job: JobConfig, settings: dict[str, Any]) -> CommandResult:
        _, hws, graphs = build_factors(job, settings)
        if len(graphs) != 1:
            raise UsageError("--hw", f"ожидался один старший вес, получено {len(hws)}")
        graph = graphs[0]
        result = self._ok(graph.to_json(), _summary(graph))
        result.dot = graph.to_dot()
        return result


def _summary(graph: CrystalGraph) -> str:
    cartan = graph.cartan
    index = graph.index_of()
    state = f"усечён на глубине {graph.depth_used}" if graph.truncated else "полный"
    lines = [f"B({','.join(map(str, graph.hw))}) над {cartan}: {len(graph)} вершин, {state}"]
    if graph.unsupported_semantics:
        lines.append("внимание: вес уровня 0, семантика не поддерживается")
    for b in graph.elements():
        weight = ",".join(map(str, graph.weight(b).dynkin(cartan)))
        eps = ",".join(str(graph.epsilon(b, i)) for i in cartan.index_set)
        phi = ",".join(str(graph.phi(b, i)) for i in cartan.index_set)
        lines.append(f"n{index[b]}: вес ({weight}) ε=({eps}) φ=({phi})")
    for source, i, target in sorted(graph.edges(), key=lambda e: (index[e[0]], e[1])):
        lines.append(f"n{index[source]} -{i}-> n{index[target]}")
    return "\n".join(lines)
