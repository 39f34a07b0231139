"""
Parâmetros físicos do campo girante e derivação das frequências características
"""

import math

from spinframe.core.exceptions import DegenerateDetuningError, DomainError
from spinframe.schemas.field import DerivedFrequencies, FieldParams


def derive(params: FieldParams) -> DerivedFrequencies:
    """
    Deriva ω̄, ω₀, ω₁, Ω, Θ e Γ a partir de (γ, H, ϑ, ω)

    Θ é tomado no ramo [0, π] via atan2(ω₁, ω₀ − ω), de modo que
    sin Θ = ω₁/Ω ≥ 0 e cos Θ = (ω₀ − ω)/Ω.

    Args:
        params: Parâmetros do campo

    Returns:
        DerivedFrequencies com todos os campos preenchidos

    Raises:
        DegenerateDetuningError: se Ω = 0 (ω = ω₀ e ω₁ = 0)
    """
    omega_bar = params.gamma * params.H
    omega0 = omega_bar * math.cos(params.theta)
    omega1 = omega_bar * math.sin(params.theta)
    detuning = omega0 - params.omega

    big_omega = math.hypot(detuning, omega1)
    if big_omega == 0.0:
        raise DegenerateDetuningError(
            f"Ω = 0 para ω = ω₀ = {omega0:.17g} e ω₁ = 0: Θ indefinido"
        )

    theta_cap = math.atan2(omega1, detuning)

    return DerivedFrequencies(
        omega_bar=omega_bar,
        omega0=omega0,
        omega1=omega1,
        omega=params.omega,
        big_omega=big_omega,
        theta_cap=theta_cap,
        gamma_cap=theta_cap - params.theta,
        theta=params.theta,
    )


def from_frequencies(omega0: float, omega1: float, omega: float) -> FieldParams:
    """
    Parametrização inversa: (ω₀, ω₁, ω) → FieldParams com γ = 1

    Args:
        omega0: Componente longitudinal ω₀ (rad/s)
        omega1: Componente transversal ω₁ ≥ 0 (rad/s)
        omega: Frequência de rotação ω ≥ 0 (rad/s)

    Raises:
        DomainError: ω₁ < 0, ω < 0, (ω₀, ω₁) = (0, 0) ou valores não finitos
    """
    if not all(math.isfinite(v) for v in (omega0, omega1, omega)):
        raise DomainError(f"Frequências não finitas: ({omega0}, {omega1}, {omega})")
    if omega1 < 0:
        raise DomainError(f"ω₁ deve ser não negativo, recebido {omega1}")
    if omega < 0:
        raise DomainError(f"ω deve ser não negativo, recebido {omega}")
    if omega0 == 0 and omega1 == 0:
        raise DomainError("(ω₀, ω₁) = (0, 0) não define a direção do campo")

    # -0.0 levaria atan2 para −π
    omega1 = float(omega1) + 0.0

    return FieldParams(
        gamma=1.0,
        H=math.hypot(omega0, omega1),
        theta=math.atan2(omega1, omega0),
        omega=omega,
    )


def frequencies(omega0: float, omega1: float, omega: float) -> DerivedFrequencies:
    """Atalho: derive(from_frequencies(ω₀, ω₁, ω))"""
    return derive(from_frequencies(omega0, omega1, omega))
