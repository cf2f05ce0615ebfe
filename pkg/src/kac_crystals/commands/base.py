"""Базовый класс подкоманды."""

from __future__ import annotations

import argparse
from abc import ABC, abstractmethod
from typing import Any

from kac_crystals.core.errors import CrystalError
from kac_crystals.core.types import CommandResult, JobConfig


class BaseCommand(ABC):
    """Подкоманда CLI.

    Каждая команда предоставляет:
    - name/description/parameters для argparse (ключ -- поле JobConfig)
    - formats -- допустимые форматы вывода
    - execute() для выполнения; доменные ошибки превращаются в _fail, а не в исключение
    """

    name: str
    description: str
    parameters: dict[str, dict[str, Any]] = {}
    formats: tuple[str, ...] = ("json", "text")

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        for field_name, spec in self.parameters.items():
            flag = "--" + field_name.replace("_", "-")
            parser.add_argument(flag, dest=field_name, **spec)

    def run(self, job: JobConfig, settings: dict[str, Any]) -> CommandResult:
        """execute() с перехватом доменных ошибок."""
        try:
            return self.execute(job, settings)
        except CrystalError as e:
            return self._fail(e)

    @abstractmethod
    def execute(self, job: JobConfig, settings: dict[str, Any]) -> CommandResult:
        """Выполнить команду по провалидированному заданию."""
        ...

    def _ok(self, payload: Any, text: str) -> CommandResult:
        return CommandResult(command=self.name, success=True, payload=payload, text=text)

    def _fail(
        self, error: CrystalError, payload: Any = None, text: str | None = None,
    ) -> CommandResult:
        return CommandResult(
            command=self.name,
            success=False,
            payload=payload,
            text=text,
            error_code=error.code,
            message=str(error),
        )


# -- общие флаги --

CARTAN_ARG = {"help": "встроенное имя (A2, G2, A1~), JSON-матрица или путь к .json/.yaml"}
HW_ARG = {"help": "старшие веса в метках Дынкина: '1,0;0,1' (ранг 1: '3,3,3')"}
DEPTH_ARG = {"type": int, "help": "предел глубины обхода (для не конечных типов -- из конфига)"}
LABEL_ARG = {"help": "веса сомножителей метки в метках Дынкина, формат как у --hw"}
STRING_ARG = {"help": "строковые параметризации сомножителей 'a.b.c;...' ('*' -- без уточнения)"}
WORD_ARG = {"help": "слово для параметризации: '0,1' или '2|0,1' (префикс|цикл)"}
I_ARG = {"type": int, "help": "вершина диаграммы Дынкина (с нуля)"}
