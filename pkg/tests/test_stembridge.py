"""Локальные аксиомы Стембриджа на графах simply-laced кристаллов."""

from __future__ import annotations

import pytest

from kac_crystals.algebra.cartan import CartanData
from kac_crystals.core.errors import NotSimplyLaced, TruncatedRange
from kac_crystals.crystals.graph import generate_crystal
from kac_crystals.crystals.stembridge import verify_stembridge


@pytest.mark.parametrize(
    "name, hw",
    [
        ("A2", (1, 0)),
        ("A2", (1, 1)),
        ("A2", (2, 1)),
        ("A3", (1, 0, 1)),
        ("A3", (0, 2, 0)),
        ("D4", (0, 1, 0, 0)),
    ],
)
def test_highest_weight_crystals_pass(name, hw):
    graph = generate_crystal(CartanData.from_name(name), hw)
    report = verify_stembridge(graph)
    assert report.passed, report.to_json(graph)["violations"][:3]
    assert report.checked_nodes == len(graph)


def test_not_simply_laced(b2):
    with pytest.raises(NotSimplyLaced):
        verify_stembridge(generate_crystal(b2, (1, 0)))


def test_truncated_graph_rejected():
    graph = generate_crystal(CartanData.from_name("A2~"), (1, 0, 0), depth_cutoff=2)
    assert graph.truncated
    with pytest.raises(TruncatedRange):
        verify_stembridge(graph)


def test_damaged_graph_reports_violations(a2):
    graph = generate_crystal(a2, (1, 1))
    damaged = graph.without_edge(graph.highest_weight_element, 0)
    report = verify_stembridge(damaged)
    assert not report.passed
    assert "weight" in {v.axiom for v in report.violations}
    data = report.to_json(damaged)
    assert data["passed"] is False
    assert data["checked_nodes"] == 8
    assert all(v["node"].startswith("n") for v in data["violations"])
