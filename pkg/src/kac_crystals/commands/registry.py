"""Реестр подкоманд."""

from __future__ import annotations

import logging

from kac_crystals.commands.base import BaseCommand

logger = logging.getLogger(__name__)


class CommandRegistry:
    """Управление подкомандами CLI; порядок регистрации -- порядок в справке."""

    def __init__(self) -> None:
        self._commands: dict[str, BaseCommand] = {}

    @property
    def commands(self) -> dict[str, BaseCommand]:
        return dict(self._commands)

    def register(self, command: BaseCommand) -> None:
        self._commands[command.name] = command
        logger.debug("Команда зарегистрирована: %s", command.name)

    def get(self, name: str) -> BaseCommand | None:
        return self._commands.get(name)

    def list_names(self) -> list[str]:
        return list(self._commands.keys())

    def load_builtin(self) -> None:
        """Загрузить встроенные подкоманды."""
        from kac_crystals.commands.builtin.compare import CompareCommand
        from kac_crystals.commands.builtin.condense import CondenseCommand
        from kac_crystals.commands.builtin.crystal import CrystalCommand
        from kac_crystals.commands.builtin.decompose import DecomposeCommand
        from kac_crystals.commands.builtin.parabolic import ParabolicCommand
        from kac_crystals.commands.builtin.signature import SignatureCommand
        from kac_crystals.commands.builtin.string_param import StringParamCommand
        from kac_crystals.commands.builtin.tensor_op import TensorOpCommand
        from kac_crystals.commands.builtin.verify import VerifyCommand

        for command in (
            CrystalCommand(),
            TensorOpCommand(),
            SignatureCommand(),
            DecomposeCommand(),
            StringParamCommand(),
            CompareCommand(),
            CondenseCommand(),
            ParabolicCommand(),
            VerifyCommand(),
        ):
            self.register(command)


def default_registry() -> CommandRegistry:
    registry = CommandRegistry()
    registry.load_builtin()
    return registry
