"""
Subcomando sweep: varredura de ω, ϑ ou τ

Para omega e theta cada linha traz o pico de cada fórmula na janela
τ ∈ [0, 2π·cycles/Ω] do ponto; para tau, a própria probabilidade.
"""

import argparse

import numpy as np
import pandas as pd

from spinframe.cli import options
from spinframe.config import numerics
from spinframe.core.logging import app_logger as logger
from spinframe.physics.closed_forms import FORMULAS, peak, rabi_window
from spinframe.physics.model import derive
from spinframe.schemas.curve import TransitionCurve
from spinframe.schemas.sweep import SweepSpec, SweepVariable
from spinframe.utils.csv_io import write_curve

NAME = "sweep"
HELP = "Varre ω, ϑ ou τ e registra as probabilidades (ou seus picos)"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help=HELP, description=HELP)
    options.add_field_arguments(parser)
    parser.add_argument(
        "--variable",
        required=True,
        choices=[v.value for v in SweepVariable],
        help="Variável varrida",
    )
    parser.add_argument("--start", type=float, required=True, help="Início da varredura")
    parser.add_argument("--stop", type=float, required=True, help="Fim da varredura")
    parser.add_argument("--steps", type=int, required=True, help="Número de pontos (≥ 2)")
    parser.add_argument(
        "--cycles",
        type=int,
        default=numerics.DEFAULT_CYCLES,
        help="Períodos de Rabi na janela de τ de cada linha",
    )
    parser.add_argument(
        "--samples",
        type=int,
        default=numerics.DEFAULT_SAMPLES,
        help="Pontos da grade de τ de cada linha",
    )
    options.add_output_argument(parser)
    parser.set_defaults(handler=run)


def _peak_rows(spec: SweepSpec, grid: np.ndarray) -> dict[str, np.ndarray]:
    variable = spec.variable.value
    columns = {variable: grid}
    peaks = {f"peak_{name}": np.empty(grid.size) for name in FORMULAS}

    for k, value in enumerate(grid):
        d = derive(spec.fixed.model_copy(update={variable: float(value)}))
        taus = rabi_window(d, spec.cycles, spec.samples)
        for name, formula in FORMULAS.items():
            peaks[f"peak_{name}"][k] = peak(formula, d, taus).value

    columns.update(peaks)
    return columns


def _tau_rows(spec: SweepSpec, grid: np.ndarray) -> dict[str, np.ndarray]:
    d = derive(spec.fixed)
    columns = {"tau": grid}
    for name, formula in FORMULAS.items():
        columns[name] = np.asarray(formula(d, grid))
    return columns


def cmd_sweep(spec: SweepSpec) -> TransitionCurve:
    """
    Executa a varredura descrita por spec

    Raises:
        DomainError: algum ponto da varredura fora do domínio (ex: Ω = 0)
    """
    grid = np.linspace(spec.start, spec.stop, spec.steps)
    logger.debug(f"sweep {spec.variable.value}: {spec.steps} pontos em [{spec.start}, {spec.stop}]")

    meta = {
        **options.base_meta(NAME),
        "variable": spec.variable.value,
        "start": spec.start,
        "stop": spec.stop,
        "steps": spec.steps,
    }
    fixed = options.field_meta(spec.fixed)

    if spec.variable is SweepVariable.TAU:
        meta.update(fixed)
        meta.update(derive(spec.fixed).as_metadata())
        rows = _tau_rows(spec, grid)
    else:
        fixed.pop(spec.variable.value)
        meta.update(fixed)
        meta["cycles"] = spec.cycles
        meta["samples"] = spec.samples
        rows = _peak_rows(spec, grid)

    return TransitionCurve(meta=meta, rows=pd.DataFrame(rows))


def run(args: argparse.Namespace) -> int:
    variable = SweepVariable(args.variable)
    # a variável varrida é substituída linha a linha; start serve de marcador
    omega_default = args.start if variable is SweepVariable.OMEGA else None
    if variable is SweepVariable.THETA and args.theta is None and args.omega0 is None:
        args = argparse.Namespace(**{**vars(args), "theta": args.start})
    params = options.params_from_args(args, omega_default=omega_default)
    spec = SweepSpec(
        variable=variable,
        start=args.start,
        stop=args.stop,
        steps=args.steps,
        fixed=params,
        cycles=args.cycles,
        samples=args.samples,
    )
    write_curve(cmd_sweep(spec), args.out)
    return 0
