"""Entry point: python -m kac_crystals <command> [flags]."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

from kac_crystals.core.config import get_project_root
from kac_crystals.interfaces.cli import run


def setup_logging(level: int = logging.WARNING, log_dir: Path | None = None) -> None:
    """stderr и, если задан каталог, файл kac_crystals.log; stdout остаётся за результатами."""
    handlers: list[logging.Handler] = [logging.StreamHandler(stream=sys.stderr)]
    if log_dir is not None:
        log_dir.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_dir / "kac_crystals.log", encoding="utf-8"))

    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        handlers=handlers,
    )


def configure_from_args(args: argparse.Namespace, settings: dict[str, Any]) -> None:
    log_cfg = settings.get("logging", {})
    level = logging.getLevelName(str(log_cfg.get("level", "WARNING")).upper())
    if not isinstance(level, int):
        level = logging.WARNING
    if args.verbose:
        level = min(level, logging.INFO)
    if args.debug:
        level = logging.DEBUG
    directory = log_cfg.get("directory") or ""
    setup_logging(level, Path(directory) if directory else None)


def main() -> None:
    load_dotenv(get_project_root() / ".env")
    sys.exit(run(sys.argv[1:], on_parsed=configure_from_args))


if __name__ == "__main__":
    main()
