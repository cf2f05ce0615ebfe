"""Строковые параметризации и порядок на последовательностях показателей."""

from __future__ import annotations

import random

import pytest

from kac_crystals.algebra.cartan import CartanData
from kac_crystals.core.errors import NonTerminating, WordMismatch, WordSupportIncomplete
from kac_crystals.core.types import Ordering
from kac_crystals.crystals.graph import generate_crystal
from kac_crystals.crystals.strings import (
    StringParam,
    StringWord,
    compare_exponent_sequences,
    find_by_string,
    lex_compare,
    reconstruct,
    string_parametrization,
)
from kac_crystals.crystals.tensor import highest_weight_labels


def test_word_parsing():
    word = StringWord.parse("2|0,1")
    assert word.prefix == (2,) and word.cycle == (0, 1)
    assert word.head(5) == (2, 0, 1, 0, 1)
    assert str(word) == "2|(0,1)*"
    assert str(StringWord.parse("0,1")) == "(0,1)*"


def test_word_equality_is_semantic():
    assert StringWord.parse("0,1").same_as(StringWord.parse("0,1,0,1"))
    assert StringWord.parse("0|1,0").same_as(StringWord.parse("0,1"))
    assert not StringWord.parse("1,0").same_as(StringWord.parse("0,1"))


def test_word_must_cover_every_node(a2):
    graph = generate_crystal(a2, (1, 1))
    with pytest.raises(WordSupportIncomplete):
        string_parametrization(graph, graph.highest_weight_element, StringWord.parse("0"))
    with pytest.raises(WordSupportIncomplete):
        string_parametrization(graph, graph.highest_weight_element, StringWord.parse("0,1,2"))


def test_lowest_weight_of_adjoint(a2):
    graph = generate_crystal(a2, (1, 1))
    lowest = next(b for b in graph.elements() if graph.weight(b).dynkin(a2) == (-1, -1))
    param = string_parametrization(graph, lowest, StringWord.parse("0,1"))
    assert param.exponents == (1, 2, 1)
    assert param.to_text() == "1.2.1"
    assert reconstruct(graph, param) == lowest
    assert find_by_string(graph, param) == lowest


def test_highest_weight_has_empty_parametrization(a2):
    graph = generate_crystal(a2, (2, 1))
    param = string_parametrization(graph, graph.highest_weight_element)
    assert param.exponents == ()
    assert reconstruct(graph, param) == graph.highest_weight_element


@pytest.mark.parametrize(
    "name, hw",
    [
        ("A1", (3,)),
        ("A2", (1, 1)),
        ("A2", (2, 1)),
        ("B2", (1, 1)),
        ("G2", (1, 0)),
        ("A3", (1, 0, 1)),
    ],
)
def test_reconstruction_on_desk_crystals(name, hw):
    graph = generate_crystal(CartanData.from_name(name), hw)
    params = set()
    for b in graph.elements():
        param = string_parametrization(graph, b)
        assert reconstruct(graph, param) == b
        params.add(param.exponents)
    assert len(params) == len(graph)


def test_reconstruction_on_tensor(sl3_w1_w2):
    word = StringWord.parse("1,0")
    for label in sl3_w1_w2.elements():
        param = string_parametrization(sl3_w1_w2, label, word)
        assert reconstruct(sl3_w1_w2, param) == label
        assert find_by_string(sl3_w1_w2, param) == label


def test_lower_component_starts_from_its_own_top(sl3_w1_w2):
    tops = [
        label for labels in highest_weight_labels(sl3_w1_w2).values() for label in labels
        if label != sl3_w1_w2.highest_weight_element
    ]
    assert len(tops) == 1
    trivial = tops[0]
    word = StringWord.parse("1,0")
    param = string_parametrization(sl3_w1_w2, trivial, word)
    assert param.exponents == ()
    assert param.origin == trivial
    assert reconstruct(sl3_w1_w2, param) == trivial
    assert find_by_string(sl3_w1_w2, param) == trivial
    # без origin отсчёт идёт от старшей метки всего произведения
    bare = StringParam(word, ())
    assert bare == param
    assert reconstruct(sl3_w1_w2, bare) == sl3_w1_w2.highest_weight_element


def test_invalid_parameter_does_not_reconstruct(a1):
    graph = generate_crystal(a1, (2,))
    word = StringWord.cyclic(a1.index_set)
    assert reconstruct(graph, StringParam(word, (3,))) is None
    assert find_by_string(graph, StringParam(word, (3,))) is None


def test_step_budget(a1):
    graph = generate_crystal(a1, (5,))
    lowest = graph.lowest_in_string(graph.highest_weight_element, 0)
    with pytest.raises(NonTerminating):
        string_parametrization(graph, lowest, step_budget=3)


def test_from_text_trims_trailing_zeros():
    word = StringWord.parse("0,1")
    assert StringParam.from_text(word, "1.0.0").exponents == (1,)
    assert StringParam.from_text(word, "").exponents == ()
    with pytest.raises(ValueError):
        StringParam.from_text(word, "1.-1")


def test_exponent_order_examples():
    word = StringWord.parse("0,1")

    def p(*values):
        return StringParam(word, values)

    assert compare_exponent_sequences(p(1), p(1, 1)) is Ordering.GREATER
    assert compare_exponent_sequences(p(2), p(1, 1)) is Ordering.GREATER
    assert compare_exponent_sequences(p(0, 2), p(1, 1)) is Ordering.LESS
    assert compare_exponent_sequences(p(1, 1), p(1, 1)) is Ordering.EQUAL
    assert lex_compare(p(1, 0, 3), p(1)) is Ordering.GREATER


def test_exponent_order_requires_same_word():
    a = StringParam(StringWord.parse("0,1"), (1,))
    b = StringParam(StringWord.parse("1,0"), (1,))
    with pytest.raises(WordMismatch):
        compare_exponent_sequences(a, b)
    c = StringParam(StringWord.parse("0,1,0,1"), (1,))
    assert compare_exponent_sequences(a, c) is Ordering.EQUAL


def test_exponent_order_is_total():
    rng = random.Random(20240601)
    word = StringWord.parse("0,1,2")

    def sample():
        values = tuple(rng.randint(0, 3) for _ in range(rng.randint(0, 4)))
        end = len(values)
        while end and values[end - 1] == 0:
            end -= 1
        return StringParam(word, values[:end])

    for _ in range(10_000):
        a, b, c = sample(), sample(), sample()
        ab = compare_exponent_sequences(a, b)
        assert ab is not Ordering.INCOMPARABLE
        assert compare_exponent_sequences(b, a) is ab.reversed()
        assert (ab is Ordering.EQUAL) == (a.exponents == b.exponents)
        if ab is Ordering.GREATER and compare_exponent_sequences(b, c) is Ordering.GREATER:
            assert compare_exponent_sequences(a, c) is Ordering.GREATER
