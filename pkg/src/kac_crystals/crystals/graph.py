"""Генерация кристалла B(ν) модели путей, экспорт в JSON/DOT/networkx."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, Sequence

import networkx as nx

from kac_crystals.algebra.cartan import CartanData, validate_cartan
from kac_crystals.algebra.weights import Weight
from kac_crystals.core.errors import TruncatedStatistics, UnknownLabel
from kac_crystals.core.types import SCHEMA_VERSION, CartanKind
from kac_crystals.crystals.base import BaseCrystal
from kac_crystals.crystals.paths import (
    PLPath,
    root_operator_e,
    root_operator_f,
    straight_path,
)

logger = logging.getLogger(__name__)

DEFAULT_DEPTH_CUTOFF = 8

_EDGE_COLORS = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan")


@dataclass(frozen=True)
class NodeData:
    """Закэшированные статистики вершины."""

    key: str
    weight: Weight
    epsilon: tuple[int, ...]
    phi: tuple[int, ...]
    depth: int


class CrystalGraph(BaseCrystal):
    """Конечный (возможно, усечённый) граф кристалла B(ν).

    Вершины -- канонические ключи путей, рёбра -- f_i. Если граф построен моделью путей
    (path_backed), операторы и ε/φ за пределами сгенерированной части считаются по путям.
    """

    def __init__(
        self,
        cartan: CartanData,
        hw: Sequence[int],
        nodes: dict[str, NodeData],
        edges: dict[tuple[str, int], str],
        hw_node: str,
        *,
        truncated: bool = False,
        depth_used: int = 0,
        path_backed: bool = True,
        unsupported_semantics: bool = False,
        paths: dict[str, PLPath] | None = None,
    ) -> None:
        self.cartan = cartan
        self.hw = tuple(int(x) for x in hw)
        self._nodes = dict(nodes)
        self._edges = dict(edges)
        self._e_edges = {(target, i): source for (source, i), target in self._edges.items()}
        self._hw_node = hw_node
        self._truncated = truncated
        self.depth_used = depth_used
        self.path_backed = path_backed
        self.unsupported_semantics = unsupported_semantics
        self._paths: dict[str, PLPath] = dict(paths or {})

    # -- BaseCrystal --

    def elements(self) -> list[str]:
        return list(self._nodes)

    @property
    def highest_weight_element(self) -> str:
        return self._hw_node

    @property
    def truncated(self) -> bool:
        return self._truncated

    def contains(self, b: str) -> bool:
        return b in self._nodes

    def node(self, b: str) -> NodeData:
        try:
            return self._nodes[b]
        except KeyError:
            raise UnknownLabel(f"вершина {b!r} не принадлежит B({list(self.hw)})") from None

    def weight(self, b: str) -> Weight:
        if b in self._nodes:
            return self._nodes[b].weight
        return self._frontier_path(b).weight()

    def epsilon(self, b: str, i: int) -> int:
        if b in self._nodes:
            return self._nodes[b].epsilon[i]
        return self._frontier_path(b).epsilon(i)

    def phi(self, b: str, i: int) -> int:
        if b in self._nodes:
            return self._nodes[b].phi[i]
        return self._frontier_path(b).phi(i)

    def f(self, b: str, i: int) -> str | None:
        target = self._edges.get((b, i))
        if target is not None:
            return target
        if self.phi(b, i) == 0:
            return None
        if not self.path_backed:
            raise TruncatedStatistics(f"f_{i} выходит за пределы сгенерированной части")
        result = root_operator_f(self.path(b), i)
        return self._remember(result)

    def e(self, b: str, i: int) -> str | None:
        source = self._e_edges.get((b, i))
        if source is not None:
            return source
        if self.epsilon(b, i) == 0:
            return None
        if not self.path_backed:
            raise TruncatedStatistics(f"e_{i} выходит за пределы сгенерированной части")
        return self._remember(root_operator_e(self.path(b), i))

    # -- пути --

    def path(self, b: str) -> PLPath:
        cached = self._paths.get(b)
        if cached is None:
            try:
                cached = PLPath.from_key(self.cartan, self.hw, b)
            except (ValueError, ZeroDivisionError, IndexError):
                raise UnknownLabel(f"ключ {b!r} не является путём") from None
            self._paths[b] = cached
        return cached

    def _frontier_path(self, b: str) -> PLPath:
        if not self.path_backed:
            raise TruncatedStatistics(f"статистики {b!r} вне графа не определены")
        return self.path(b)

    def _remember(self, path: PLPath | None) -> str | None:
        if path is None:
            return None
        key = path.key()
        self._paths.setdefault(key, path)
        return key

    # -- структура --

    def edges(self) -> list[tuple[str, int, str]]:
        return [(source, i, target) for (source, i), target in self._edges.items()]

    def index_of(self) -> dict[str, int]:
        """Короткие номера вершин n0, n1, ... в порядке обхода."""
        return {key: k for k, key in enumerate(self._nodes)}

    def find_by_weight(self, weight: Weight) -> list[str]:
        return [key for key, data in self._nodes.items() if data.weight == weight]

    def without_edge(self, source: str, i: int) -> CrystalGraph:
        """Копия графа без одного f-ребра; статистики пересчитываются по рёбрам."""
        edges = {k: v for k, v in self._edges.items() if k != (source, i)}
        nodes = _stats_from_edges(self.cartan, self._nodes, edges)
        return CrystalGraph(
            self.cartan, self.hw, nodes, edges, self._hw_node,
            truncated=self._truncated, depth_used=self.depth_used, path_backed=False,
        )

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        for key, data in self._nodes.items():
            graph.add_node(
                key,
                weight=data.weight.dynkin(self.cartan),
                epsilon=data.epsilon,
                phi=data.phi,
                depth=data.depth,
            )
        for source, i, target in self.edges():
            graph.add_edge(source, target, key=i, color=i)
        return graph

    # -- сериализация --

    def to_json(self) -> dict[str, Any]:
        index = self.index_of()
        return {
            "schema_version": SCHEMA_VERSION,
            "cartan": {
                "name": self.cartan.name,
                "matrix": [list(row) for row in self.cartan.a],
                "symmetrizer": list(self.cartan.d),
                "kind": self.cartan.kind.value,
            },
            "hw": list(self.hw),
            "depth_used": self.depth_used,
            "truncated": self._truncated,
            "unsupported_semantics": self.unsupported_semantics,
            "path_backed": self.path_backed,
            "hw_node": self._hw_node,
            "nodes": [
                {
                    "id": f"n{index[key]}",
                    "key": key,
                    "depth": data.depth,
                    "weight": data.weight.to_json(self.cartan),
                    "epsilon": list(data.epsilon),
                    "phi": list(data.phi),
                }
                for key, data in self._nodes.items()
            ],
            "edges": sorted(
                [source, i, target] for source, i, target in self.edges()
            ),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> CrystalGraph:
        cartan_data = data["cartan"]
        cartan = validate_cartan(
            cartan_data["matrix"], cartan_data.get("symmetrizer"), name=cartan_data.get("name"),
        )
        nodes = {}
        for item in data["nodes"]:
            weight = item["weight"]
            nodes[item["key"]] = NodeData(
                key=item["key"],
                weight=Weight(tuple(weight["fundamental"]), tuple(weight["roots"])),
                epsilon=tuple(item["epsilon"]),
                phi=tuple(item["phi"]),
                depth=item["depth"],
            )
        edges = {(source, int(i)): target for source, i, target in data["edges"]}
        return cls(
            cartan, data["hw"], nodes, edges, data["hw_node"],
            truncated=data["truncated"],
            depth_used=data["depth_used"],
            path_backed=data.get("path_backed", True),
            unsupported_semantics=data.get("unsupported_semantics", False),
        )

    def to_dot(self) -> str:
        index = self.index_of()
        ordered = sorted(self._nodes.values(), key=lambda n: (n.depth, n.key))
        lines = [f'digraph "B({",".join(map(str, self.hw))})" {{', "  node [shape=box];"]
        for data in ordered:
            label = ",".join(str(x) for x in data.weight.dynkin(self.cartan))
            lines.append(f'  n{index[data.key]} [label="({label})"];')
        for source, i, target in sorted(self.edges(), key=lambda e: (index[e[0]], e[1])):
            color = _EDGE_COLORS[i % len(_EDGE_COLORS)]
            lines.append(
                f'  n{index[source]} -> n{index[target]} [label="{i}", color="{color}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"

    def canonical_keys(self) -> list[str]:
        return sorted(self._nodes)

    def __repr__(self) -> str:
        state = "truncated" if self._truncated else "complete"
        return f"CrystalGraph({self.cartan}, hw={list(self.hw)}, {len(self._nodes)} nodes, {state})"


def generate_crystal(
    cartan: CartanData,
    hw: Sequence[int],
    depth_cutoff: int | None = None,
) -> CrystalGraph:
    """BFS-замыкание старшего пути по всем f_i до глубины depth_cutoff.

    Для конечного типа без cutoff обход идёт до полного замыкания.
    """
    hw = tuple(int(x) for x in hw)
    if depth_cutoff is not None and depth_cutoff < 0:
        raise ValueError(f"depth_cutoff должен быть >= 0, получено {depth_cutoff}")
    if depth_cutoff is None and cartan.kind is not CartanKind.FINITE:
        logger.warning(
            "Тип %s не конечный, depth_cutoff не задан: используем %d",
            cartan, DEFAULT_DEPTH_CUTOFF,
        )
        depth_cutoff = DEFAULT_DEPTH_CUTOFF

    top = straight_path(cartan, hw)
    unsupported = cartan.kind is CartanKind.AFFINE and cartan.level(hw) == 0
    if unsupported:
        logger.warning("B(%s) уровня 0 над %s: семантика не поддерживается", list(hw), cartan)

    paths: dict[str, PLPath] = {top.key(): top}
    nodes: dict[str, NodeData] = {top.key(): _node_data(cartan, top, 0)}
    edges: dict[tuple[str, int], str] = {}
    frontier = deque([top.key()])
    truncated = False
    depth_used = 0

    while frontier:
        key = frontier.popleft()
        data = nodes[key]
        depth_used = max(depth_used, data.depth)
        if depth_cutoff is not None and data.depth >= depth_cutoff:
            if any(data.phi):
                truncated = True
            continue
        for i in cartan.index_set:
            if data.phi[i] == 0:
                continue
            lowered = root_operator_f(paths[key], i)
            target = lowered.key()
            if target not in nodes:
                paths[target] = lowered
                nodes[target] = _node_data(cartan, lowered, data.depth + 1)
                frontier.append(target)
            edges[(key, i)] = target

    graph = CrystalGraph(
        cartan, hw, nodes, edges, top.key(),
        truncated=truncated,
        depth_used=depth_used,
        unsupported_semantics=unsupported,
        paths=paths,
    )
    if truncated:
        logger.warning("B(%s) над %s усечён на глубине %d", list(hw), cartan, depth_used)
    logger.info("Сгенерирован %r", graph)
    return graph


def _node_data(cartan: CartanData, path: PLPath, depth: int) -> NodeData:
    return NodeData(
        key=path.key(),
        weight=path.weight(),
        epsilon=tuple(path.epsilon(i) for i in cartan.index_set),
        phi=tuple(path.phi(i) for i in cartan.index_set),
        depth=depth,
    )


def _stats_from_edges(
    cartan: CartanData,
    nodes: dict[str, NodeData],
    edges: dict[tuple[str, int], str],
) -> dict[str, NodeData]:
    """ε/φ как длины цепочек рёбер в графе."""
    back = {(target, i): source for (source, i), target in edges.items()}

    def run(start: str, i: int, table: dict) -> int:
        count, current = 0, start
        while (current, i) in table:
            current = table[(current, i)]
            count += 1
        return count

    return {
        key: NodeData(
            key=key,
            weight=data.weight,
            epsilon=tuple(run(key, i, back) for i in cartan.index_set),
            phi=tuple(run(key, i, edges) for i in cartan.index_set),
            depth=data.depth,
        )
        for key, data in nodes.items()
    }
