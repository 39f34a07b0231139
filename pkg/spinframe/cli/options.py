"""
Flags compartilhadas entre os subcomandos

Duas parametrizações mutuamente exclusivas do campo:
    --omega0 --omega1 --omega          (frequências)
    --gamma --field --theta --omega    (grandezas físicas, γ padrão 1)
"""

import argparse
from typing import Any, Optional

from spinframe.config import settings
from spinframe.core.exceptions import ConfigurationError
from spinframe.physics.model import from_frequencies
from spinframe.schemas.field import DerivedFrequencies, FieldParams
from spinframe.schemas.integrator import IntegratorConfig, Scheme


def add_field_arguments(parser: argparse.ArgumentParser) -> None:
    freq = parser.add_argument_group("parametrização por frequências")
    freq.add_argument("--omega0", type=float, help="ω₀ = ω̄ cos ϑ (rad/s)")
    freq.add_argument("--omega1", type=float, help="ω₁ = ω̄ sin ϑ ≥ 0 (rad/s)")

    phys = parser.add_argument_group("parametrização física")
    phys.add_argument("--gamma", type=float, help="Razão giromagnética γ (padrão 1)")
    phys.add_argument("--field", type=float, help="Amplitude H do campo")
    phys.add_argument("--theta", type=float, help="Ângulo polar ϑ do campo (rad)")

    parser.add_argument("--omega", type=float, help="Frequência de rotação ω ≥ 0 (rad/s)")


def add_integrator_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("integrador numérico")
    group.add_argument("--dt", type=float, help="Passo de tempo (padrão 1e-4/max(ω̄, ω, Ω))")
    group.add_argument(
        "--scheme",
        choices=[s.value for s in Scheme],
        default=Scheme.MIDPOINT.value,
        help="Esquema de integração",
    )


def add_output_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="Arquivo de saída (padrão: stdout)")


def params_from_args(
    args: argparse.Namespace, omega_default: Optional[float] = None
) -> FieldParams:
    """
    Monta FieldParams a partir das flags

    Args:
        args: Namespace do argparse
        omega_default: Valor de ω quando --omega é omitido (None = obrigatório)

    Raises:
        ConfigurationError: parametrizações misturadas ou incompletas
    """
    frequency_flags = {"--omega0": args.omega0, "--omega1": args.omega1}
    physical_flags = {"--gamma": args.gamma, "--field": args.field, "--theta": args.theta}
    uses_frequencies = any(v is not None for v in frequency_flags.values())
    uses_physical = any(v is not None for v in physical_flags.values())

    if uses_frequencies and uses_physical:
        raise ConfigurationError("Use --omega0/--omega1 ou --gamma/--field/--theta, não ambos")
    if not (uses_frequencies or uses_physical):
        raise ConfigurationError("Informe --omega0/--omega1 ou --field/--theta")

    omega = args.omega if args.omega is not None else omega_default
    if omega is None:
        raise ConfigurationError("--omega é obrigatório")

    if uses_frequencies:
        missing = [flag for flag, value in frequency_flags.items() if value is None]
        if missing:
            raise ConfigurationError(f"Faltando {', '.join(missing)}")
        return from_frequencies(args.omega0, args.omega1, omega)

    missing = [flag for flag in ("--field", "--theta") if physical_flags[flag] is None]
    if missing:
        raise ConfigurationError(f"Faltando {', '.join(missing)}")
    gamma = args.gamma if args.gamma is not None else 1.0
    return FieldParams(gamma=gamma, H=args.field, theta=args.theta, omega=omega)


def integrator_from_args(args: argparse.Namespace) -> IntegratorConfig:
    return IntegratorConfig(dt=args.dt, scheme=Scheme(args.scheme))


def base_meta(command: str) -> dict[str, Any]:
    return {"spinframe": settings.VERSION, "command": command}


def field_meta(params: FieldParams, d: Optional[DerivedFrequencies] = None) -> dict[str, Any]:
    """Registro dos parâmetros do campo (e das frequências derivadas, se houver)"""
    meta: dict[str, Any] = {
        "gamma": params.gamma,
        "field": params.H,
        "theta": params.theta,
        "omega": params.omega,
    }
    if d is not None:
        meta.update(d.as_metadata())
    return meta
