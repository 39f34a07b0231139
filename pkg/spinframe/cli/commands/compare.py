"""
Subcomando compare: formas fechadas contra o oráculo numérico
"""

import argparse
from typing import Optional

import numpy as np
import pandas as pd

from spinframe.cli import options
from spinframe.cli.commands.evolve import tau_grid
from spinframe.config import numerics
from spinframe.core.exceptions import ConfigurationError, ToleranceExceededError
from spinframe.core.logging import app_logger as logger
from spinframe.physics.closed_forms import FORMULAS
from spinframe.physics.model import derive
from spinframe.physics.oracle import oracle_curves
from spinframe.schemas.field import FieldParams
from spinframe.schemas.integrator import IntegratorConfig
from spinframe.utils.csv_io import write_frame

NAME = "compare"
HELP = "Desvio máximo |forma fechada − oráculo| por fórmula; saída 2 se algum desvio ≥ --tol"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help=HELP, description=HELP)
    options.add_field_arguments(parser)
    parser.add_argument("--t1", type=float, default=0.0, help="Instante inicial t1 (s)")
    parser.add_argument("--tau-max", type=float, help="Maior τ (padrão: um período 2π/Ω)")
    parser.add_argument(
        "--samples", type=int, default=numerics.COMPARE_SAMPLES, help="Pontos da grade de τ"
    )
    parser.add_argument(
        "--tol", type=float, default=numerics.COMPARE_TOL, help="Tolerância do desvio máximo"
    )
    options.add_integrator_arguments(parser)
    options.add_output_argument(parser)
    parser.set_defaults(handler=run)


def cmd_compare(
    params: FieldParams,
    t1: float = 0.0,
    tau_max: Optional[float] = None,
    cfg: Optional[IntegratorConfig] = None,
    samples: int = numerics.COMPARE_SAMPLES,
) -> tuple[dict, pd.DataFrame]:
    """
    Calcula o desvio máximo de cada par (fórmula, oráculo) na grade de τ

    Returns:
        (metadados, tabela pair,max_abs_deviation)

    Raises:
        ConfigurationError: dt viola a guarda de resolução ou grade inválida
    """
    cfg = cfg or IntegratorConfig()
    if not np.isfinite(t1):
        raise ConfigurationError(f"--t1 deve ser finito, recebido {t1}")
    d = derive(params)
    if tau_max is None:
        tau_max = 2 * np.pi / d.big_omega
    taus = tau_grid(tau_max, samples)

    numeric = oracle_curves(d, t1, taus, cfg)
    pairs, deviations = [], []
    for name, formula in FORMULAS.items():
        closed = np.asarray(formula(d, taus))
        pairs.append(f"{name}/oracle_{name}")
        deviations.append(float(np.max(np.abs(closed - numeric[f"oracle_{name}"]))))

    meta = {
        **options.base_meta(NAME),
        **options.field_meta(params, d),
        "t1": float(t1),
        "tau_max": float(tau_max),
        "samples": samples,
        "scheme": cfg.scheme.value,
        "dt": cfg.step_for(d),
    }
    frame = pd.DataFrame({"pair": pairs, "max_abs_deviation": deviations})
    return meta, frame


def check_tolerance(frame: pd.DataFrame, tol: float) -> None:
    """
    Raises:
        ToleranceExceededError: algum desvio não estritamente abaixo de tol (NaN incluso)
    """
    deviations = dict(zip(frame["pair"], frame["max_abs_deviation"]))
    if not all(value < tol for value in deviations.values()):
        raise ToleranceExceededError(deviations, tol)


def run(args: argparse.Namespace) -> int:
    if not args.tol > 0:
        raise ConfigurationError(f"--tol deve ser positivo, recebido {args.tol}")
    params = options.params_from_args(args)
    cfg = options.integrator_from_args(args)
    meta, frame = cmd_compare(params, args.t1, args.tau_max, cfg, args.samples)
    meta["tol"] = args.tol
    write_frame(meta, frame, args.out)

    check_tolerance(frame, args.tol)
    logger.info(f"compare: todos os desvios < {args.tol:.1e}")
    return 0
