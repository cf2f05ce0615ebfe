"""Форматирование результатов команд: json, text, dot."""

from __future__ import annotations

import json
from typing import Any

from kac_crystals.core.types import SCHEMA_VERSION, CommandResult, JobConfig


def to_document(job: JobConfig, result: CommandResult) -> dict[str, Any]:
    """JSON-документ результата; поле job позволяет воспроизвести запуск."""
    document: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": result.command,
        "job": job.reproducible_dump(),
        "success": result.success,
        "result": result.payload,
    }
    if not result.success:
        document["error"] = {"code": result.error_code, "message": result.message}
    return document


def render(job: JobConfig, result: CommandResult) -> str:
    """Вывод для stdout; одинаковый JobConfig даёт побайтно одинаковый текст."""
    if job.format == "json":
        return json.dumps(
            to_document(job, result), sort_keys=True, ensure_ascii=False, indent=2,
        ) + "\n"
    if job.format == "dot":
        return result.dot or ""
    return (result.text + "\n") if result.text else ""


def error_line(code: str, message: str) -> str:
    return f"error: {code}: {message}"
