"""Веса, порядок доминирования и обратный порядок доминирования на кортежах."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from kac_crystals.algebra.cartan import CartanData
from kac_crystals.algebra.weights import (
    NOT_IN_ROOT_LATTICE,
    UNDETERMINED,
    Weight,
    WeightTuple,
    dominance_leq,
    inverse_dominance_compare,
    root_difference,
    strictly_greater_tuples,
    tuple_geq,
)
from kac_crystals.core.errors import LengthMismatch, MixedCartanData
from kac_crystals.core.types import Ordering


def w(*labels):
    return Weight.from_dynkin(labels)


def test_pairing_and_dynkin(a2):
    weight = Weight((1, 0), (1, 0))
    assert weight.dynkin(a2) == (-1, 1)
    assert weight.pairing(a2, 0) == -1


def test_reflection(a2):
    assert w(1, 0).reflect(a2, 0).dynkin(a2) == (-1, 1)
    assert w(2, 3).reflect(a2, 1).reflect(a2, 1) == w(2, 3)


def test_addition_rank_mismatch():
    with pytest.raises(MixedCartanData):
        w(1) + w(1, 0)


def test_dominance_by_simple_root(a1):
    assert dominance_leq(w(0), w(2), a1)
    assert not dominance_leq(w(2), w(0), a1)
    verdict = dominance_leq(w(0), w(1), a1)
    assert not verdict
    assert verdict.reason == NOT_IN_ROOT_LATTICE
    assert verdict.difference == (Fraction(1, 2),)


def test_dominance_in_sl3(a2):
    assert dominance_leq(w(0, 0), w(1, 1), a2)
    assert not dominance_leq(w(1, 1), w(0, 0), a2)
    assert not dominance_leq(w(2, 0), w(0, 1), a2)
    assert dominance_leq(w(0, 1), w(2, 0), a2)


def test_root_difference_same_fundamental(affine_a1):
    beta1 = Weight((1, 0), (0, 0))
    beta2 = Weight((1, 0), (1, 1))
    assert root_difference(beta1, beta2, affine_a1) == (-1, -1)
    assert dominance_leq(beta2, beta1, affine_a1)


def test_dominance_undetermined_for_singular_matrix(affine_a1):
    verdict = dominance_leq(w(1, 0), w(0, 1), affine_a1)
    assert not verdict
    assert verdict.reason == UNDETERMINED


def test_inverse_dominance_sl2(a1):
    # (1, -1) и (-1, 1): частичные суммы 1 и -1
    high = WeightTuple(a1, (w(-1), w(1)))
    low = WeightTuple(a1, (w(1), w(-1)))
    assert tuple_geq(high, low)
    assert inverse_dominance_compare(high, low) is Ordering.GREATER
    assert inverse_dominance_compare(low, high) is Ordering.LESS
    assert inverse_dominance_compare(high, high) is Ordering.EQUAL


def test_inverse_dominance_different_totals(a1):
    left = WeightTuple(a1, (w(1), w(1)))
    right = WeightTuple(a1, (w(1), w(-1)))
    assert inverse_dominance_compare(left, right) is Ordering.INCOMPARABLE


def test_inverse_dominance_errors(a1, a2):
    with pytest.raises(LengthMismatch):
        inverse_dominance_compare(WeightTuple(a1, (w(1),)), WeightTuple(a1, (w(1), w(0))))
    with pytest.raises(MixedCartanData):
        inverse_dominance_compare(WeightTuple(a1, (w(1),)), WeightTuple(a2, (w(1, 0),)))


def test_strictly_greater_tuples(a1):
    system = [w(1), w(-1)]
    xi = WeightTuple(a1, (w(1), w(-1)))
    greater = strictly_greater_tuples(xi, [system, system])
    assert [t.entries for t in greater] == [(w(-1), w(1))]
    top = WeightTuple(a1, (w(-1), w(1)))
    assert strictly_greater_tuples(top, [system, system]) == []


def test_strictly_greater_length_mismatch(a1):
    with pytest.raises(LengthMismatch):
        strictly_greater_tuples(WeightTuple(a1, (w(1),)), [[w(1)], [w(1)]])


def _reachable_by_roots(cartan, start, height):
    """Метки Дынкина start + Σ c_j α_j для всех c ⩾ 0 с Σ c_j ⩽ height."""
    columns = [tuple(cartan.a[i][j] for i in cartan.index_set) for j in cartan.index_set]
    reached = set()
    for coeffs in itertools.product(range(height + 1), repeat=cartan.rank):
        if sum(coeffs) > height:
            continue
        reached.add(tuple(
            s + sum(c * col[i] for c, col in zip(coeffs, columns))
            for i, s in enumerate(start)
        ))
    return reached


@pytest.mark.parametrize(
    "name, bound",
    [("A1", 5), ("A2", 2), ("B2", 1)],
)
def test_dominance_matches_root_search(name, bound):
    cartan = CartanData.from_name(name)
    box = list(itertools.product(range(-bound, bound + 1), repeat=cartan.rank))
    for low in box:
        reached = _reachable_by_roots(cartan, low, 10)
        for high in box:
            expected = high in reached
            assert bool(dominance_leq(w(*low), w(*high), cartan)) is expected, (low, high)


def test_inverse_dominance_examples(a1):
    def pair(x, y):
        return WeightTuple(a1, (w(x), w(y)))

    assert inverse_dominance_compare(pair(1, 1), pair(3, -1)) is Ordering.GREATER
    assert inverse_dominance_compare(pair(1, 3), pair(3, 1)) is Ordering.GREATER
    assert inverse_dominance_compare(pair(3, 1), pair(1, 3)) is Ordering.LESS


def _tuples_with_total(cartan, total, first_choices):
    result = []
    for head in first_choices:
        rest = [t - sum(column) for t, column in zip(total, zip(*head))]
        result.append(WeightTuple(cartan, tuple(w(*x) for x in head) + (w(*rest),)))
    return result


@pytest.mark.parametrize(
    "name, total, heads",
    [
        ("A1", (1,), [((a,), (b,)) for a in range(-3, 4) for b in range(-3, 4)]),
        ("A2", (1, 1), [((a, b),) for a in range(-1, 2) for b in range(-1, 2)]),
    ],
)
def test_inverse_dominance_is_partial_order(name, total, heads):
    cartan = CartanData.from_name(name)
    tuples = _tuples_with_total(cartan, total, heads)
    table = {
        (x, y): inverse_dominance_compare(tuples[x], tuples[y])
        for x in range(len(tuples)) for y in range(len(tuples))
    }
    flipped = {
        Ordering.GREATER: Ordering.LESS,
        Ordering.LESS: Ordering.GREATER,
        Ordering.EQUAL: Ordering.EQUAL,
        Ordering.INCOMPARABLE: Ordering.INCOMPARABLE,
    }
    for (x, y), verdict in table.items():
        assert (verdict is Ordering.EQUAL) == (x == y)
        assert table[(y, x)] is flipped[verdict]
    above = {x: {y for y in range(len(tuples)) if table[(y, x)] is Ordering.GREATER}
             for x in range(len(tuples))}
    for x, ys in above.items():
        for y in ys:
            assert above[y] <= ys, (x, y)


def test_strictly_greater_is_finite_in_sl3(a2):
    omega1 = [w(1, 0), w(-1, 1), w(0, -1)]
    omega2 = [w(0, 1), w(1, -1), w(-1, 0)]
    bottom = WeightTuple(a2, (w(1, 0), w(-1, 0)))
    greater = strictly_greater_tuples(bottom, [omega1, omega2])
    assert sorted(tuple(x.dynkin(a2) for x in t.entries) for t in greater) == [
        ((-1, 1), (1, -1)),
        ((0, -1), (0, 1)),
    ]
    assert len(greater) < len(omega1) * len(omega2)
    top = WeightTuple(a2, (w(0, -1), w(0, 1)))
    assert strictly_greater_tuples(top, [omega1, omega2]) == []
