"""
Subcomando plotscript: script de plotagem para um CSV de evolve ou sweep
"""

import argparse
from pathlib import Path
from typing import Optional

from spinframe.core.logging import app_logger as logger
from spinframe.utils.csv_io import read_curve
from spinframe.utils.plot_script import default_script_path, render_plot_script

NAME = "plotscript"
HELP = "Gera um script matplotlib que lê o CSV pelas colunas"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help=HELP, description=HELP)
    parser.add_argument("curve", help="CSV gerado por evolve ou sweep")
    parser.add_argument("--out", help="Caminho do script (padrão: <curve>.plot.py)")
    parser.set_defaults(handler=run)


def cmd_plotscript(curve_path: Path, out: Optional[Path] = None) -> Path:
    """
    Raises:
        CurveFormatError: CSV ausente ou fora do formato
    """
    curve = read_curve(curve_path)
    target = out or default_script_path(curve_path)
    with open(target, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(render_plot_script(curve, curve_path))
    logger.info(f"Script de plotagem escrito: {target}")
    return target


def run(args: argparse.Namespace) -> int:
    out = Path(args.out) if args.out else None
    cmd_plotscript(Path(args.curve), out)
    return 0
