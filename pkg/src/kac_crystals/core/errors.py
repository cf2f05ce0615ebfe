"""Доменные ошибки. Имя класса -- стабильный код, который CLI печатает пользователю."""

from __future__ import annotations


class CrystalError(ValueError):
    """Базовая ошибка всех модулей пакета."""

    @property
    def code(self) -> str:
        return type(self).__name__


# -- root_data --

class NotGCM(CrystalError):
    """Матрица не является обобщённой матрицей Картана."""


class NotSymmetrizable(CrystalError):
    """Для матрицы не существует симметризатора."""


class UnknownCartanName(CrystalError):
    """Неизвестное имя встроенного типа."""


class MixedCartanData(CrystalError):
    """Объекты построены над разными данными Картана."""


class LengthMismatch(CrystalError):
    """Кортежи весов разной длины."""


# -- path_crystal / characters --

class NotDominant(CrystalError):
    """Вес не доминантный."""


class NotFiniteType(CrystalError):
    """Операция определена только для конечного типа."""


class NotSimplyLaced(CrystalError):
    """Аксиомы Стембриджа проверяются только для simply-laced типов."""


class TruncatedWithoutFlag(CrystalError):
    """Характер усечённого графа запрошен без флага partial."""


class PartialCharacterComparison(CrystalError):
    """Сравнение частичного характера с полным."""


# -- tensor_crystal --

class EmptyFactorList(CrystalError):
    """Тензорное произведение без сомножителей."""


class TruncatedStatistics(CrystalError):
    """ε/φ сомножителя нельзя определить на данной глубине."""


class TruncatedRange(CrystalError):
    """Операция выходит за пределы сгенерированной части кристалла."""


class FactorIndexOutOfRange(CrystalError):
    """Номер сомножителя вне диапазона 1..n."""


class UnknownLabel(CrystalError):
    """Метка не принадлежит тензорному кристаллу."""


class AmbiguousLabel(CrystalError):
    """Вес сомножителя не определяет элемент однозначно."""


class WordSupportIncomplete(CrystalError):
    """Цикл слова не содержит все вершины диаграммы."""


class WordMismatch(CrystalError):
    """Сравниваются параметризации по разным словам."""


class NonTerminating(CrystalError):
    """Превышен лимит шагов строковой параметризации."""


# -- typea --

class BadResidue(CrystalError):
    """Неверный модуль или вычет."""


class BlockTooLarge(CrystalError):
    """Размер блока параболической подалгебры вне 1..m."""


# -- verification --

class InvariantViolation(CrystalError):
    """Нарушен инвариант: найдено набором проверок или внутренней сверкой."""
