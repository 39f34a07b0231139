"""
Router principal da CLI
Agrega todos os subcomandos
"""

import argparse

from spinframe.cli.commands import compare, evolve, plotscript, sweep
from spinframe.config import settings
from spinframe.core.exceptions import ConfigurationError

COMMANDS = (evolve, sweep, compare, plotscript)


class CliParser(argparse.ArgumentParser):
    """ArgumentParser cujos erros de uso viram ConfigurationError (saída 1, não 2)"""

    def error(self, message):
        raise ConfigurationError(f"{self.prog}: {message}")


def build_parser() -> CliParser:
    parser = CliParser(
        prog=settings.PROJECT_NAME,
        description="Probabilidades de transição de spin-1/2 em campo magnético girante",
    )
    parser.add_argument("--version", action="version", version=settings.VERSION)

    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Logs em nível DEBUG")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Apenas avisos e erros")

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for command in COMMANDS:
        command.register(subparsers)

    return parser
