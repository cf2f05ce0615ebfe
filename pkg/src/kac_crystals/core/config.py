"""Загрузка и резолв конфигурации."""

from __future__ import annotations

import os
import re
import logging
from pathlib import Path
from typing import Any

import yaml

logger = logging.getLogger(__name__)

# ${VAR} или ${VAR:-default}
_ENV_PATTERN = re.compile(r"\$\{(\w+)(?::-([^}]*))?\}")

DEFAULTS: dict[str, Any] = {
    "generation": {"depth_cutoff": 8, "step_budget": 100_000},
    "output": {"directory": "", "format": "text"},
    "logging": {"level": "WARNING", "directory": ""},
    "verification": {"seed": 20240601, "samples": 200},
}


def load_config(config_path: Path | str = "config.yaml") -> dict[str, Any]:
    """Загрузить config.yaml с подстановкой переменных окружения поверх DEFAULTS."""
    config_path = Path(config_path)
    if not config_path.exists():
        logger.warning("Конфиг не найден: %s, используем значения по умолчанию", config_path)
        return _merge(DEFAULTS, {})

    with open(config_path, encoding="utf-8") as f:
        raw = f.read()

    resolved = _resolve_env_vars(raw)

    try:
        config = yaml.safe_load(resolved) or {}
    except yaml.YAMLError:
        logger.exception("Ошибка парсинга %s", config_path)
        return _merge(DEFAULTS, {})

    return _merge(DEFAULTS, config)


def _resolve_env_vars(text: str) -> str:
    """Заменить ${VAR_NAME} и ${VAR_NAME:-default} на значения из os.environ."""
    def replacer(match: re.Match) -> str:
        var_name, default = match.group(1), match.group(2)
        value = os.environ.get(var_name, "")
        if not value:
            if default is not None:
                return default
            logger.warning("Переменная окружения %s не задана", var_name)
        return value

    return _ENV_PATTERN.sub(replacer, text)


def _merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    result = {k: (dict(v) if isinstance(v, dict) else v) for k, v in base.items()}
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(result.get(key), dict):
            result[key] = _merge(result[key], value)
        else:
            result[key] = value
    return result


def get_project_root() -> Path:
    """Определить корень проекта (где лежит config.yaml или pyproject.toml)."""
    current = Path(__file__).resolve()
    for parent in [current] + list(current.parents):
        if (parent / "config.yaml").exists() or (parent / "pyproject.toml").exists():
            return parent
    return Path.cwd()
