"""Командная строка: разбор флагов, сборка JobConfig, диспетчеризация подкоманд.

Коды выхода: 0 -- успех, 1 -- доменная ошибка, 2 -- ошибка использования.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from pydantic import ValidationError

from kac_crystals import __version__
from kac_crystals.commands.parsing import UsageError
from kac_crystals.commands.registry import CommandRegistry, default_registry
from kac_crystals.core.config import get_project_root, load_config
from kac_crystals.core.errors import CrystalError
from kac_crystals.core.types import CommandResult, JobConfig
from kac_crystals.interfaces.formatters import error_line, render

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

OnParsed = Callable[[argparse.Namespace, dict[str, Any]], None]


def build_parser(registry: CommandRegistry) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "dot", "text"], help="формат вывода")
    common.add_argument("--output", help="файл результата (относительно output.directory)")
    common.add_argument("--config", help="путь к config.yaml")
    common.add_argument("--verbose", action="store_true", help="логирование INFO")
    common.add_argument("--debug", action="store_true", help="логирование DEBUG")

    parser = argparse.ArgumentParser(
        prog="kac-crystals",
        description="Кристаллы Кашивары для симметризуемых алгебр Каца-Муди.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in registry.list_names():
        command = registry.get(name)
        sub = subparsers.add_parser(
            name, parents=[common], help=command.description, description=command.description,
        )
        command.add_arguments(sub)
    return parser


def job_from_args(args: argparse.Namespace, settings: dict[str, Any]) -> JobConfig:
    """Флаги поверх значений конфига; ошибки валидации -- ошибки использования."""
    values: dict[str, Any] = {
        "format": settings.get("output", {}).get("format", "text"),
        "step_budget": settings.get("generation", {}).get("step_budget", 100_000),
    }
    for field_name in JobConfig.model_fields:
        value = getattr(args, field_name, None)
        if value is not None:
            values[field_name] = value
    try:
        return JobConfig(**values)
    except ValidationError as e:
        first = e.errors()[0]
        field_name = str(first["loc"][0]) if first["loc"] else "command"
        raise UsageError("--" + field_name.replace("_", "-"), first["msg"]) from None


def dispatch(
    job: JobConfig,
    settings: dict[str, Any],
    registry: CommandRegistry | None = None,
) -> tuple[int, CommandResult]:
    registry = registry or default_registry()
    command = registry.get(job.command)
    if command is None:
        raise UsageError("command", f"неизвестная подкоманда {job.command!r}")
    if job.format not in command.formats:
        raise UsageError(
            "--format", f"{command.name} поддерживает только {', '.join(command.formats)}",
        )
    logger.info("Запуск %s: %s", job.command, job.reproducible_dump())
    result = command.run(job, settings)
    return (EXIT_OK if result.success else EXIT_DOMAIN_ERROR), result


def run(
    argv: Sequence[str] | None = None,
    settings: dict[str, Any] | None = None,
    on_parsed: OnParsed | None = None,
) -> int:
    """Полный цикл одной команды; возвращает код выхода и никогда не пробрасывает исключения."""
    registry = default_registry()
    parser = build_parser(registry)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR

    if settings is None:
        config_path = Path(args.config) if args.config else get_project_root() / "config.yaml"
        settings = load_config(config_path)
    if on_parsed is not None:
        on_parsed(args, settings)

    try:
        job = job_from_args(args, settings)
        code, result = dispatch(job, settings, registry)
        _emit(job, result, settings)
        if not result.success:
            _print_error(error_line(result.error_code or "CrystalError", result.message or ""))
        return code
    except UsageError as e:
        _print_error(f"{parser.prog} {args.command}: error: {e}")
        return EXIT_USAGE_ERROR
    except CrystalError as e:
        _print_error(error_line(e.code, str(e)))
        return EXIT_DOMAIN_ERROR
    except Exception as e:
        logger.exception("Необработанная ошибка в %s", args.command)
        _print_error(error_line(type(e).__name__, str(e)))
        return EXIT_DOMAIN_ERROR


def output_path(job: JobConfig, settings: dict[str, Any]) -> Path | None:
    if not job.output:
        return None
    path = Path(job.output)
    directory = settings.get("output", {}).get("directory") or ""
    if not path.is_absolute() and directory:
        path = Path(directory) / path
    return path


def _emit(job: JobConfig, result: CommandResult, settings: dict[str, Any]) -> None:
    text = render(job, result)
    if not text:
        return
    path = output_path(job, settings)
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("Результат записан в %s", path)


def _print_error(text: str) -> None:
    sys.stderr.write(text + "\n")
    sys.stderr.flush()
