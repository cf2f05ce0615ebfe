"""Базовые типы: перечисления, конфигурация задания, результат команды."""

from __future__ import annotations

from enum import Enum
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

SCHEMA_VERSION = 1


class CartanKind(str, Enum):
    FINITE = "finite"
    AFFINE = "affine"
    GENERAL = "general"


class Ordering(str, Enum):
    """Результат сравнения в частичном или полном порядке."""
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"

    def reversed(self) -> Ordering:
        if self is Ordering.GREATER:
            return Ordering.LESS
        if self is Ordering.LESS:
            return Ordering.GREATER
        return self


OutputFormat = Literal["json", "dot", "text"]


class JobConfig(BaseModel):
    """Полное описание запуска одной подкоманды.

    Сериализуется в каждый JSON-результат, так что запуск воспроизводим по выводу.
    """
    model_config = ConfigDict(extra="forbid", frozen=True)

    command: str
    cartan: str | None = None
    hw: str | None = None
    depth: int | None = Field(default=None, ge=0)
    label: str | None = None
    string: str | None = None
    i: int | None = None
    op: Literal["e", "f"] | None = None
    word: str | None = None
    mode: Literal["dominance", "inverse-dominance", "exponents"] | None = None
    left: str | None = None
    right: str | None = None
    partition: str | None = None
    p: int | None = None
    r: int | None = None
    m: int | None = None
    blocks: str | None = None
    seed: int | None = None
    samples: int | None = Field(default=None, ge=1)
    step_budget: int = Field(default=100_000, ge=1)
    format: OutputFormat = "text"
    output: str | None = None

    @field_validator("cartan", "hw", "label", "partition", "blocks", "left", "right")
    @classmethod
    def _strip(cls, value: str | None) -> str | None:
        return value.strip() if isinstance(value, str) else value

    def reproducible_dump(self) -> dict[str, Any]:
        return self.model_dump(mode="json", exclude_none=True)


class CommandResult(BaseModel):
    """Результат выполнения подкоманды."""
    command: str
    success: bool = True
    payload: Any = None
    text: str | None = None
    dot: str | None = None
    error_code: str | None = None
    message: str | None = None
