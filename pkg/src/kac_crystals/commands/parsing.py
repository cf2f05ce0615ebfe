"""Разбор значений флагов: данные Картана, старшие веса, метки тензорного кристалла."""

from __future__ import annotations

import json
import logging
from typing import Any, Hashable, Sequence

from kac_crystals.algebra.cartan import CartanData, load_cartan
from kac_crystals.core.errors import AmbiguousLabel, UnknownLabel
from kac_crystals.core.types import CartanKind, JobConfig
from kac_crystals.crystals.base import BaseCrystal
from kac_crystals.crystals.graph import DEFAULT_DEPTH_CUTOFF, CrystalGraph, generate_crystal
from kac_crystals.crystals.strings import (
    StringParam,
    StringWord,
    find_by_string,
    string_parametrization,
)
from kac_crystals.crystals.tensor import TensorCrystal, TensorLabel

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Ошибка использования: неверный или отсутствующий флаг (код выхода 2)."""

    def __init__(self, flag: str, message: str) -> None:
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def require(value, flag: str):
    if value is None:
        raise UsageError(flag, "обязательный флаг не задан")
    return value


def parse_cartan(text: str | None) -> CartanData:
    text = require(text, "--cartan")
    try:
        return load_cartan(text)
    except json.JSONDecodeError as e:
        raise UsageError("--cartan", f"некорректный JSON: {e.msg}") from None
    except (KeyError, TypeError) as e:
        raise UsageError("--cartan", f"некорректное описание матрицы: {e}") from None


def parse_ints(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(flag, f"ожидались целые числа через запятую: {text!r}") from None


def split_factors(text: str, rank: int) -> list[str]:
    """Сомножители разделяются ';'; при ранге 1 допускается и ','."""
    if ";" in text or rank != 1:
        return text.split(";")
    return text.split(",")


def parse_hws(text: str | None, cartan: CartanData) -> list[tuple[int, ...]]:
    """'1,0;0,1' -> [(1, 0), (0, 1)]; для ранга 1 '3,3,3' -> [(3,), (3,), (3,)]."""
    text = require(text, "--hw")
    hws = [parse_ints(chunk, "--hw") for chunk in split_factors(text, cartan.rank)]
    for hw in hws:
        if len(hw) != cartan.rank:
            raise UsageError("--hw", f"вес {list(hw)} не длины {cartan.rank}")
    return hws


def parse_weights(
    text: str | None, cartan: CartanData, flag: str, count: int | None = None,
) -> list[tuple[int, ...]]:
    """Кортеж весов в метках Дынкина, формат как у --hw; count -- ожидаемая длина."""
    text = require(text, flag)
    weights = [parse_ints(chunk, flag) for chunk in split_factors(text, cartan.rank)]
    for w in weights:
        if len(w) != cartan.rank:
            raise UsageError(flag, f"вес {list(w)} не длины {cartan.rank}")
    if count is not None and len(weights) != count:
        raise UsageError(flag, f"ожидалось {count} сомножителей, получено {len(weights)}")
    return weights


def parse_word(text: str | None, cartan: CartanData | None = None) -> StringWord:
    """Без --word -- циклическое слово по вершинам; без данных Картана слово обязательно."""
    if text is None:
        if cartan is None:
            raise UsageError("--word", "обязательный флаг не задан")
        return StringWord.cyclic(cartan.index_set)
    try:
        return StringWord.parse(text)
    except ValueError:
        raise UsageError("--word", f"ожидалось '0,1' или '2|0,1': {text!r}") from None


def parse_string_param(text: str, word: StringWord, flag: str = "--string") -> StringParam:
    try:
        return StringParam.from_text(word, text)
    except ValueError:
        raise UsageError(flag, f"ожидалось 'a.b.c' из неотрицательных чисел: {text!r}") from None


def resolve_element(
    crystal: BaseCrystal,
    dynkin: Sequence[int],
    string: StringParam | None,
    where: str,
) -> Hashable:
    """Элемент кристалла по весу; при неоднозначности нужна строковая параметризация."""
    cartan = crystal.cartan
    candidates = [
        b for b in crystal.elements() if crystal.weight(b).dynkin(cartan) == tuple(dynkin)
    ]
    if not candidates:
        raise UnknownLabel(f"{where}: нет элемента веса {list(dynkin)}")
    if string is not None:
        found = find_by_string(crystal, string)
        if found is None or found not in candidates:
            raise UnknownLabel(
                f"{where}: нет элемента веса {list(dynkin)} с параметризацией {string.to_text()}"
            )
        return found
    if len(candidates) > 1:
        raise AmbiguousLabel(
            f"{where}: {len(candidates)} элементов веса {list(dynkin)}; "
            "уточните через --string"
        )
    return candidates[0]


def resolve_label(
    tensor: TensorCrystal,
    label_text: str | None,
    string_text: str | None = None,
    word: StringWord | None = None,
) -> TensorLabel:
    """Метка тензорного кристалла по весам сомножителей (и параметризациям)."""
    weights = parse_weights(label_text, tensor.cartan, "--label", tensor.n)
    strings: list[StringParam | None] = [None] * tensor.n
    if string_text is not None:
        chunks = string_text.split(";")
        if len(chunks) != tensor.n:
            raise UsageError("--string", f"ожидалось {tensor.n} параметризаций через ';'")
        word = word or StringWord.cyclic(tensor.index_set)
        strings = [
            None if chunk.strip() == "*" else parse_string_param(chunk.strip(), word)
            for chunk in chunks
        ]
    factors = [
        resolve_element(factor, w, s, f"сомножитель {j}")
        for j, (factor, w, s) in enumerate(zip(tensor.factors, weights, strings), start=1)
    ]
    label = TensorLabel(tuple(factors))
    logger.debug("Метка %s разрешена: %r", label_text, label)
    return label


def depth_for(job: JobConfig, cartan: CartanData, settings: dict[str, Any]) -> int | None:
    """--depth, иначе для не конечного типа generation.depth_cutoff из конфига."""
    if job.depth is not None:
        return job.depth
    if cartan.kind is CartanKind.FINITE:
        return None
    return int(settings.get("generation", {}).get("depth_cutoff", DEFAULT_DEPTH_CUTOFF))


def build_factors(
    job: JobConfig, settings: dict[str, Any],
) -> tuple[CartanData, list[tuple[int, ...]], list[CrystalGraph]]:
    """Данные Картана, старшие веса и графы B(ν_j) по флагам --cartan/--hw/--depth."""
    cartan = parse_cartan(job.cartan)
    hws = parse_hws(job.hw, cartan)
    depth = depth_for(job, cartan, settings)
    return cartan, hws, [generate_crystal(cartan, hw, depth) for hw in hws]


def describe_label(
    tensor: TensorCrystal, label: TensorLabel, word: StringWord | None = None,
) -> list[dict[str, Any]]:
    """Веса и строковые параметризации сомножителей -- то, чем метка задаётся в CLI."""
    cartan = tensor.cartan
    return [
        {
            "weight": list(factor.weight(b).dynkin(cartan)),
            "string": string_parametrization(factor, b, word).to_text(),
        }
        for factor, b in zip(tensor.factors, label.factors)
    ]


def label_text(described: list[dict[str, Any]]) -> str:
    weights = " ⊗ ".join("(" + ",".join(map(str, d["weight"])) + ")" for d in described)
    strings = ";".join(d["string"] for d in described)
    return f"{weights}  [--string {strings}]" if strings.strip(";") else weights
