"""Обобщённые матрицы Картана: валидация, симметризатор, встроенные типы."""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from pathlib import Path
from typing import Sequence

import sympy
import yaml

from kac_crystals.core.errors import NotGCM, NotSymmetrizable, UnknownCartanName
from kac_crystals.core.types import CartanKind

logger = logging.getLogger(__name__)

_NAME_RE = re.compile(r"^([A-Ga-g])(\d+)\s*(\^?\(1\)|~)?$")


@dataclass(frozen=True)
class CartanData:
    """Симметризуемая обобщённая матрица Картана.

    a[i][j] = <α_j, α_i^∨>, вершины -- 0..rank-1 (index_set хранит их явно).
    Создавать через validate_cartan() или from_name().
    """

    index_set: tuple[int, ...]
    a: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    kind: CartanKind
    name: str | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.index_set)

    def __str__(self) -> str:
        return self.name or f"GCM{list(map(list, self.a))}"

    @property
    def is_simply_laced(self) -> bool:
        return all(
            self.a[i][j] in (0, -1)
            for i in self.index_set for j in self.index_set if i != j
        )

    def components(self) -> list[list[int]]:
        """Связные компоненты диаграммы Дынкина."""
        return _components(self.a)

    @cached_property
    def null_root(self) -> tuple[int, ...] | None:
        """δ в координатах простых корней (только для аффинного типа)."""
        if self.kind is not CartanKind.AFFINE:
            return None
        return _primitive_kernel_vector(sympy.Matrix(self.a))

    @cached_property
    def null_coroot(self) -> tuple[int, ...] | None:
        """Центральный элемент K = Σ a_i^∨ α_i^∨ (только для аффинного типа)."""
        if self.kind is not CartanKind.AFFINE:
            return None
        return _primitive_kernel_vector(sympy.Matrix(self.a).T)

    def level(self, dynkin: Sequence[int]) -> int | None:
        """Уровень <ν, K> веса с метками Дынкина dynkin."""
        coroot = self.null_coroot
        if coroot is None:
            return None
        return sum(c * x for c, x in zip(coroot, dynkin))

    @cached_property
    def sympy_matrix(self) -> sympy.Matrix:
        return sympy.Matrix(self.a)

    @cached_property
    def is_invertible(self) -> bool:
        return self.sympy_matrix.det() != 0

    @classmethod
    def from_name(cls, name: str) -> CartanData:
        return validate_cartan(builtin_matrix(name), name=_canonical_name(name))


def validate_cartan(
    matrix: Sequence[Sequence[int]],
    symmetrizer: Sequence[int] | None = None,
    name: str | None = None,
) -> CartanData:
    """Проверить GCM и вернуть CartanData; симметризатор вычисляется, если не задан."""
    a = tuple(tuple(int(x) for x in row) for row in matrix)
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise NotGCM(f"матрица должна быть квадратной и непустой, получено {matrix!r}")
    for i in range(n):
        if a[i][i] != 2:
            raise NotGCM(f"a[{i}][{i}] = {a[i][i]}, ожидалось 2")
        for j in range(n):
            if i == j:
                continue
            if a[i][j] > 0:
                raise NotGCM(f"a[{i}][{j}] = {a[i][j]} > 0")
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise NotGCM(f"несимметричный нулевой узор в ({i}, {j})")

    if symmetrizer is None:
        d = _minimal_symmetrizer(a)
    else:
        d = tuple(int(x) for x in symmetrizer)
        if len(d) != n or any(x <= 0 for x in d):
            raise NotSymmetrizable(f"симметризатор должен быть положительным вектором длины {n}")
        for i in range(n):
            for j in range(n):
                if d[i] * a[i][j] != d[j] * a[j][i]:
                    raise NotSymmetrizable(
                        f"d[{i}]·a[{i}][{j}] != d[{j}]·a[{j}][{i}] для d={list(d)}"
                    )

    kind = _detect_kind(a, d)
    data = CartanData(index_set=tuple(range(n)), a=a, d=d, kind=kind, name=name)
    logger.debug("Данные Картана %s: тип %s, d=%s", data, kind.value, d)
    return data


def load_cartan(source: str) -> CartanData:
    """Встроенное имя, JSON-литерал матрицы или путь к файлу (.json/.yaml)."""
    text = source.strip()
    if text.startswith("["):
        return validate_cartan(json.loads(text))
    if text.startswith("{"):
        return _from_mapping(json.loads(text))
    path = Path(text)
    if path.suffix in (".json", ".yaml", ".yml") and path.exists():
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
        if isinstance(data, list):
            return validate_cartan(data)
        return _from_mapping(data)
    return CartanData.from_name(text)


def _from_mapping(data: dict) -> CartanData:
    if "name" in data and "matrix" not in data:
        return CartanData.from_name(data["name"])
    return validate_cartan(data["matrix"], data.get("symmetrizer"), name=data.get("name"))


# -- встроенные типы --

def builtin_matrix(name: str) -> list[list[int]]:
    """Матрица Картана по имени: A_n, B_n, C_n, D_n, E6-8, F4, G2, A_n^(1)."""
    match = _NAME_RE.match(name.strip())
    if not match:
        raise UnknownCartanName(f"не удалось разобрать имя типа: {name!r}")
    letter, n, affine = match.group(1).upper(), int(match.group(2)), match.group(3)

    if affine:
        if letter != "A" or n < 1:
            raise UnknownCartanName(f"из аффинных поддерживается только A_n^(1): {name!r}")
        if n == 1:
            return [[2, -2], [-2, 2]]
        size = n + 1
        a = _zero(size)
        for i in range(size):
            a[i][i] = 2
            a[i][(i + 1) % size] = -1
            a[(i + 1) % size][i] = -1
        return a

    if letter == "A" and n >= 1:
        return _chain(n)
    if letter == "B" and n >= 2:
        a = _chain(n)
        a[n - 1][n - 2] = -2
        return a
    if letter == "C" and n >= 2:
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a
    if letter == "D" and n >= 4:
        a = _chain(n - 1)
        a = [row + [0] for row in a] + [[0] * n]
        a[n - 1][n - 1] = 2
        a[n - 1][n - 3] = a[n - 3][n - 1] = -1
        return a
    if letter == "E" and n in (6, 7, 8):
        a = _zero(n)
        for i in range(n):
            a[i][i] = 2
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]:
            if i < n and j < n:
                a[i][j] = a[j][i] = -1
        return a
    if letter == "F" and n == 4:
        return [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    if letter == "G" and n == 2:
        return [[2, -3], [-1, 2]]
    raise UnknownCartanName(f"неизвестный тип: {name!r}")


def _canonical_name(name: str) -> str:
    match = _NAME_RE.match(name.strip())
    if match and match.group(3):
        return f"{match.group(1).upper()}{match.group(2)}^(1)"
    return name.strip().upper()


def _zero(n: int) -> list[list[int]]:
    return [[0] * n for _ in range(n)]


def _chain(n: int) -> list[list[int]]:
    a = _zero(n)
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


# -- симметризатор и классификация --

def _components(a: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(a)
    seen: set[int] = set()
    result = []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j != i and a[i][j] != 0 and j not in seen:
                    seen.add(j)
                    stack.append(j)
        result.append(sorted(comp))
    return result


def _minimal_symmetrizer(a: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for comp in _components(a):
        root = comp[0]
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in comp:
                if j == i or a[i][j] == 0:
                    continue
                # d_i a_ij = d_j a_ji
                value = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = value
                    stack.append(j)
                elif d[j] != value:
                    raise NotSymmetrizable(f"несогласованный цикл через вершины {i}, {j}")
        scale = lcm(*(d[i].denominator for i in comp))
        ints = [int(d[i] * scale) for i in comp]
        common = gcd(*ints)
        for i, value in zip(comp, ints):
            d[i] = Fraction(value // common)
    return tuple(int(x) for x in d)


def _symmetrized(a: Sequence[Sequence[int]], d: Sequence[int], nodes: list[int]) -> sympy.Matrix:
    return sympy.Matrix([[d[i] * a[i][j] for j in nodes] for i in nodes])


def _is_positive_definite(b: sympy.Matrix) -> bool:
    return all(b[:k, :k].det() > 0 for k in range(1, b.rows + 1))


def _detect_kind(a: tuple[tuple[int, ...], ...], d: tuple[int, ...]) -> CartanKind:
    comps = _components(a)
    if all(_is_positive_definite(_symmetrized(a, d, comp)) for comp in comps):
        return CartanKind.FINITE
    if len(comps) == 1:
        nodes = comps[0]
        if _symmetrized(a, d, nodes).det() == 0 and all(
            _is_positive_definite(_symmetrized(a, d, [j for j in nodes if j != k]))
            for k in nodes
        ):
            return CartanKind.AFFINE
    return CartanKind.GENERAL


def _primitive_kernel_vector(m: sympy.Matrix) -> tuple[int, ...]:
    kernel = m.nullspace()
    vec = kernel[0]
    scale = lcm(*(int(sympy.fraction(x)[1]) for x in vec))
    ints = [int(x * scale) for x in vec]
    common = gcd(*ints)
    ints = [x // common for x in ints]
    if sum(ints) < 0:
        ints = [-x for x in ints]
    return tuple(ints)
