"""
Subcomando evolve: W(τ) das três fórmulas numa grade de τ
"""

import argparse
from typing import Optional

import numpy as np
import pandas as pd

from spinframe.cli import options
from spinframe.config import numerics
from spinframe.core.exceptions import ConfigurationError
from spinframe.core.logging import app_logger as logger
from spinframe.physics import oracle
from spinframe.physics.closed_forms import FORMULAS, rabi_window
from spinframe.physics.model import derive
from spinframe.schemas.curve import TransitionCurve
from spinframe.schemas.field import FieldParams
from spinframe.schemas.integrator import IntegratorConfig
from spinframe.utils.csv_io import write_curve

NAME = "evolve"
HELP = "Amostra w1937, w1954 e w_unified em τ ∈ [0, tau_max]"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help=HELP, description=HELP)
    options.add_field_arguments(parser)
    parser.add_argument("--t1", type=float, default=0.0, help="Instante inicial t1 (s)")
    parser.add_argument(
        "--tau-max",
        type=float,
        help=f"Maior τ (padrão: {numerics.DEFAULT_CYCLES} períodos de Rabi)",
    )
    parser.add_argument(
        "--samples", type=int, default=numerics.DEFAULT_SAMPLES, help="Pontos da grade de τ"
    )
    parser.add_argument(
        "--oracle", action="store_true", help="Adiciona as colunas integradas numericamente"
    )
    options.add_integrator_arguments(parser)
    options.add_output_argument(parser)
    parser.set_defaults(handler=run)


def tau_grid(tau_max: float, samples: int) -> np.ndarray:
    """linspace(0, tau_max, samples) com validação"""
    if samples < 2:
        raise ConfigurationError(f"--samples deve ser ≥ 2, recebido {samples}")
    if not np.isfinite(tau_max) or tau_max <= 0:
        raise ConfigurationError(f"--tau-max deve ser finito e positivo, recebido {tau_max}")
    return np.linspace(0.0, tau_max, samples)


def cmd_evolve(
    params: FieldParams,
    t1: float = 0.0,
    tau_max: Optional[float] = None,
    samples: int = numerics.DEFAULT_SAMPLES,
    cfg: Optional[IntegratorConfig] = None,
) -> TransitionCurve:
    """
    Curva (tau, w1937, w1954, w_unified[, oracle_*]) para t2 = t1 + τ

    Args:
        params: Parâmetros do campo
        t1: Instante inicial
        tau_max: Maior τ; None usa DEFAULT_CYCLES períodos 2π/Ω
        samples: Número de pontos
        cfg: Se fornecido, adiciona as colunas do oráculo

    Raises:
        ConfigurationError: grade inválida ou dt fora da guarda
        DomainError: parâmetros fora do domínio das fórmulas
    """
    if not np.isfinite(t1):
        raise ConfigurationError(f"--t1 deve ser finito, recebido {t1}")
    d = derive(params)
    if tau_max is None:
        taus = rabi_window(d, numerics.DEFAULT_CYCLES, samples)
        tau_max = float(taus[-1])
    taus = tau_grid(tau_max, samples)

    columns: dict[str, np.ndarray] = {"tau": taus}
    for name, formula in FORMULAS.items():
        columns[name] = np.asarray(formula(d, taus))

    meta = {
        **options.base_meta(NAME),
        **options.field_meta(params, d),
        "t1": float(t1),
        "tau_max": float(tau_max),
        "samples": samples,
    }

    if cfg is not None:
        meta["scheme"] = cfg.scheme.value
        meta["dt"] = cfg.step_for(d)
        columns.update(oracle.oracle_curves(d, t1, taus, cfg))

    logger.debug(f"evolve: Ω={d.big_omega:.6g}, {samples} amostras até τ={tau_max:.6g}")
    return TransitionCurve(meta=meta, rows=pd.DataFrame(columns))


def run(args: argparse.Namespace) -> int:
    params = options.params_from_args(args)
    cfg = options.integrator_from_args(args) if args.oracle else None
    curve = cmd_evolve(params, args.t1, args.tau_max, args.samples, cfg)
    write_curve(curve, args.out)
    return 0
