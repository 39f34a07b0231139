"""
spinframe - Ponto de entrada da CLI

Códigos de saída:
    0  sucesso
    1  entrada inválida (validação, domínio, configuração, CSV, E/S)
    2  compare acima da tolerância
"""

import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from spinframe.cli.router import build_parser
from spinframe.core.exceptions import (
    ConfigurationError,
    CurveFormatError,
    DomainError,
    ToleranceExceededError,
)
from spinframe.core.logging import app_logger as logger
from spinframe.core.logging import setup_logging

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_TOLERANCE = 2


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Executa a CLI e devolve o código de saída (sem chamar sys.exit)

    Args:
        argv: Argumentos (padrão: sys.argv[1:])
    """
    try:
        args = build_parser().parse_args(argv)
    except ConfigurationError as exc:
        logger.error(str(exc))
        return EXIT_INVALID
    except SystemExit as exc:
        # --help / --version
        return int(exc.code or 0)

    if args.verbose:
        setup_logging("DEBUG")
    elif args.quiet:
        setup_logging("WARNING")

    try:
        return args.handler(args)
    except ToleranceExceededError as exc:
        logger.warning(str(exc))
        return EXIT_TOLERANCE
    except ValidationError as exc:
        first = exc.errors()[0]
        logger.error(f"Parâmetros inválidos: {first['loc']} {first['msg']}")
        return EXIT_INVALID
    except (DomainError, ConfigurationError, CurveFormatError, OSError) as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
