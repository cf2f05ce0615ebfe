"""Общие фикстуры: данные Картана и кристаллы-примеры."""

from __future__ import annotations

import pytest

from kac_crystals.algebra.cartan import CartanData
from kac_crystals.crystals.graph import generate_crystal
from kac_crystals.crystals.tensor import build_tensor


@pytest.fixture(scope="session")
def a1() -> CartanData:
    return CartanData.from_name("A1")


@pytest.fixture(scope="session")
def a2() -> CartanData:
    return CartanData.from_name("A2")


@pytest.fixture(scope="session")
def b2() -> CartanData:
    return CartanData.from_name("B2")


@pytest.fixture(scope="session")
def g2() -> CartanData:
    return CartanData.from_name("G2")


@pytest.fixture(scope="session")
def affine_a1() -> CartanData:
    return CartanData.from_name("A1~")


@pytest.fixture(scope="session")
def sl2_111(a1):
    """B(1) ⊗ B(1) ⊗ B(1) для sl_2."""
    return build_tensor([generate_crystal(a1, (1,)) for _ in range(3)])


@pytest.fixture(scope="session")
def sl2_333(a1):
    """B(3) ⊗ B(3) ⊗ B(3) для sl_2."""
    return build_tensor([generate_crystal(a1, (3,)) for _ in range(3)])


@pytest.fixture(scope="session")
def sl3_w1_w2(a2):
    """B(ω_1) ⊗ B(ω_2) для sl_3."""
    return build_tensor([generate_crystal(a2, (1, 0)), generate_crystal(a2, (0, 1))])


@pytest.fixture(scope="session")
def settings() -> dict:
    return {
        "generation": {"depth_cutoff": 4, "step_budget": 100_000},
        "output": {"directory": "", "format": "text"},
        "logging": {"level": "WARNING", "directory": ""},
        "verification": {"seed": 7, "samples": 50},
    }


@pytest.fixture(scope="session")
def find_label():
    """Единственная метка, веса сомножителей которой равны weights (метки Дынкина)."""

    def find(tensor, weights):
        found = [
            label for label in tensor.elements()
            if all(
                tuple(factor.weight(b).dynkin(tensor.cartan)) == tuple(w)
                for factor, b, w in zip(tensor.factors, label.factors, weights)
            )
        ]
        assert len(found) == 1
        return found[0]

    return find
