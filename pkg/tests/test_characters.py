"""Характеры, формула Вейля, положительные корни, размерность по φ_i(𝕍)."""

from __future__ import annotations

import itertools
import random

import pytest

from kac_crystals.algebra.cartan import CartanData
from kac_crystals.core.errors import (
    InvariantViolation,
    NotDominant,
    NotFiniteType,
    PartialCharacterComparison,
    TruncatedWithoutFlag,
)
from kac_crystals.crystals import characters as characters_module
from kac_crystals.crystals.characters import (
    character,
    cyclotomic_dot_dimension,
    positive_roots,
    weight_system,
    weyl_dimension,
)
from kac_crystals.crystals.graph import generate_crystal
from kac_crystals.crystals.tensor import build_tensor


def dominant_weights(rank: int, max_height: int):
    for hw in itertools.product(range(max_height + 1), repeat=rank):
        if sum(hw) <= max_height:
            yield hw


@pytest.mark.parametrize(
    "name, rank, count",
    [("A1", 1, 1), ("A2", 2, 3), ("B2", 2, 4), ("G2", 2, 6), ("D4", 4, 12), ("E8", 8, 120)],
)
def test_positive_roots(name, rank, count):
    roots = positive_roots(CartanData.from_name(name))
    assert len(roots) == count
    assert all(len(r) == rank and min(r) >= 0 for r in roots)


def test_positive_roots_need_finite_type(affine_a1):
    with pytest.raises(NotFiniteType):
        positive_roots(affine_a1)


@pytest.mark.parametrize(
    "name, hw, dim",
    [
        ("A1", (3,), 4),
        ("A2", (1, 1), 8),
        ("B2", (1, 0), 5),
        ("B2", (0, 1), 4),
        ("C3", (1, 0, 0), 6),
        ("G2", (1, 0), 7),
        ("G2", (0, 1), 14),
        ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248),
    ],
)
def test_weyl_dimension_known_values(name, hw, dim):
    assert weyl_dimension(CartanData.from_name(name), hw) == dim


def test_weyl_dimension_g2_closed_form(g2):
    for a, b in itertools.product(range(5), repeat=2):
        expected = (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3)
        expected = expected * (a + 3 * b + 4) * (2 * a + 3 * b + 5) // 120
        assert weyl_dimension(g2, (a, b)) == expected


def test_weyl_dimension_rejects_non_dominant(a2):
    with pytest.raises(NotDominant):
        weyl_dimension(a2, (1, -1))
    with pytest.raises(NotDominant):
        weyl_dimension(a2, (1,))


@pytest.mark.parametrize("name, max_height", [("A1", 6), ("A2", 4), ("B2", 3), ("G2", 2)])
def test_crystal_size_matches_weyl(name, max_height):
    cartan = CartanData.from_name(name)
    for hw in dominant_weights(cartan.rank, max_height):
        assert len(generate_crystal(cartan, hw)) == weyl_dimension(cartan, hw), hw


@pytest.mark.slow
@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2"])
def test_crystal_size_matches_weyl_full_range(name):
    cartan = CartanData.from_name(name)
    for hw in dominant_weights(cartan.rank, 6):
        assert len(generate_crystal(cartan, hw)) == weyl_dimension(cartan, hw), hw


@pytest.mark.parametrize("name, hw", [("A2", (2, 1)), ("B2", (1, 1)), ("G2", (1, 0))])
def test_character_is_reflection_invariant(name, hw):
    cartan = CartanData.from_name(name)
    graph = generate_crystal(cartan, hw)
    char = character(graph)
    assert char.size == len(graph)
    assert char.is_reflection_invariant()
    assert sorted(w.dynkin(cartan) for w in weight_system(graph)) == sorted(
        w.dynkin(cartan) for w in char.weights()
    )


def test_adjoint_character(a2):
    char = character(generate_crystal(a2, (1, 1)))
    zero = next(w for w in char.weights() if w.dynkin(a2) == (0, 0))
    assert char.multiplicity(zero) == 2
    assert len(char.weights()) == 7


def test_tensor_character_is_convolution(a2):
    left, right = generate_crystal(a2, (1, 0)), generate_crystal(a2, (1, 1))
    tensor = build_tensor([left, right])
    assert character(tensor) == character(left) * character(right)
    assert character(tensor).size == 24


def test_sum_of_components(a1):
    tensor = build_tensor([generate_crystal(a1, (1,)), generate_crystal(a1, (1,))])
    parts = character(generate_crystal(a1, (2,))) + character(generate_crystal(a1, (0,)))
    assert character(tensor) == parts


def test_partial_characters(affine_a1):
    graph = generate_crystal(affine_a1, (1, 0), depth_cutoff=3)
    with pytest.raises(TruncatedWithoutFlag):
        character(graph)
    partial = character(graph, partial=True)
    assert partial.partial
    assert partial.size == len(graph)
    top = graph.weight(graph.highest_weight_element)
    assert partial.multiplicity(top) == 1
    with pytest.raises(PartialCharacterComparison):
        assert partial == character(generate_crystal(affine_a1, (0, 0), depth_cutoff=3))


def test_character_json(a1):
    data = character(generate_crystal(a1, (2,))).to_json()
    assert [entry["weight"]["dynkin"] for entry in data] == [[2], [0], [-2]]
    assert all(entry["multiplicity"] == 1 for entry in data)


def test_cyclotomic_dot_dimension_random_instances():
    rng = random.Random(20240601)
    names = ["A1", "A2", "B2", "G2", "A3", "A1~", "A2~"]
    for _ in range(20):
        cartan = CartanData.from_name(rng.choice(names))
        hws = [
            tuple(rng.randint(0, 3) for _ in cartan.index_set)
            for _ in range(rng.randint(1, 3))
        ]
        i = rng.choice(cartan.index_set)
        assert cyclotomic_dot_dimension(cartan, hws, i) == sum(hw[i] for hw in hws)


def test_cyclotomic_dot_dimension_mismatch_is_invariant_violation(a2, monkeypatch):
    monkeypatch.setattr(characters_module, "h_stats", lambda tensor, label, i: (0, 99))
    with pytest.raises(InvariantViolation, match="ожидалось 1"):
        cyclotomic_dot_dimension(a2, [(1, 0)], 0)
