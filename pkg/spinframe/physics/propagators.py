"""
Propagadores em forma fechada e mudanças de referencial

Cada construtor lista seus fatores da esquerda para a direita exatamente como
impressos nas fórmulas, convertidos com R_j(a) = e^{I_j a/(iħ)} (ver su2).
"""

import math

from spinframe.core.exceptions import DomainError
from spinframe.physics.su2 import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    Hermitian2,
    Spinor,
    Unitary2,
    apply,
    basis_state,
    product,
    rot_y,
    rot_z,
)
from spinframe.schemas.field import DerivedFrequencies
from spinframe.schemas.frame import AlphaMode, FrameLabel


def _check_interval(t1: float, t2: float) -> float:
    if not (math.isfinite(t1) and math.isfinite(t2)):
        raise DomainError(f"Tempos não finitos: t1={t1}, t2={t2}")
    if t2 < t1:
        raise DomainError(f"t2 ({t2}) deve ser maior ou igual a t1 ({t1})")
    return t2 - t1


def _check_tau(tau: float) -> float:
    if not math.isfinite(tau) or tau < 0:
        raise DomainError(f"τ deve ser finito e não negativo, recebido {tau}")
    return tau


def lab_propagator(d: DerivedFrequencies, t1: float, t2: float) -> Unitary2:
    """
    Propagador exato no laboratório de t1 a t2

        e^{−I_zωt₂/(iħ)} e^{I_yΘ/(iħ)} e^{−I_zΩ(t₂−t₁)/(iħ)} e^{−I_yΘ/(iħ)} e^{I_zωt₁/(iħ)}
        = R_z(−ωt₂) R_y(Θ) R_z(−Ωτ) R_y(−Θ) R_z(ωt₁)
    """
    tau = _check_interval(t1, t2)
    return product(
        rot_z(-d.omega * t2),
        rot_y(d.theta_cap),
        rot_z(-d.big_omega * tau),
        rot_y(-d.theta_cap),
        rot_z(d.omega * t1),
    )


def rotating_field_propagator(d: DerivedFrequencies, tau: float) -> Unitary2:
    """
    Evolução vista no referencial do campo girante (−ωt, ϑ)

        e^{I_yΓ/(iħ)} e^{−I_zΩτ/(iħ)} e^{−I_yΓ/(iħ)} = R_y(Γ) R_z(−Ωτ) R_y(−Γ)
    """
    tau = _check_tau(tau)
    return product(
        rot_y(d.gamma_cap),
        rot_z(-d.big_omega * tau),
        rot_y(-d.gamma_cap),
    )


def dual_frame_matrix(d: DerivedFrequencies, tau: float) -> Unitary2:
    """
    Operador de seis fatores da estrutura de dois referenciais

        [R_y(Γ) R_z(−Ωτ) R_y(−Γ)] · [R_y(−ϑ) R_z(−ωτ) R_y(ϑ)]

    O primeiro grupo é a rotação dinâmica (Ω), o segundo a rotação cinemática (ω)
    do referencial de observação.
    """
    tau = _check_tau(tau)
    return product(
        rot_y(d.gamma_cap),
        rot_z(-d.big_omega * tau),
        rot_y(-d.gamma_cap),
        rot_y(-d.theta),
        rot_z(-d.omega * tau),
        rot_y(d.theta),
    )


def kinematic_rotation(d: DerivedFrequencies, tau: float) -> Unitary2:
    """Segundo grupo de fatores de dual_frame_matrix: R_y(−ϑ) R_z(−ωτ) R_y(ϑ)"""
    tau = _check_tau(tau)
    return product(rot_y(-d.theta), rot_z(-d.omega * tau), rot_y(d.theta))


def rotating_basis_map(d: DerivedFrequencies, t: float) -> Unitary2:
    """
    B(t) = R_z(−ωt) R_y(ϑ): leva |m⟩ de I_z ao autoestado de I_H(t) com o mesmo m

    Satisfaz B(t)† I_H(t) B(t) = I_z.
    """
    return product(rot_z(-d.omega * t), rot_y(d.theta))


def rotating_basis(d: DerivedFrequencies, t: float, m: float) -> Spinor:
    """Autoestado |m⟩ do campo girante no instante t, m ∈ {+1/2, −1/2}"""
    return apply(rotating_basis_map(d, t), basis_state(m))


def instantaneous_hamiltonian(d: DerivedFrequencies, t: float) -> Hermitian2:
    """H(t) = −(I_zω₀ + I_xω₁ cos ωt − I_yω₁ sin ωt); espectro {−ω̄/2, +ω̄/2}"""
    phase = d.omega * t
    return Hermitian2(
        -0.5
        * (
            d.omega0 * PAULI_Z
            + d.omega1 * math.cos(phase) * PAULI_X
            - d.omega1 * math.sin(phase) * PAULI_Y
        )
    )


def quantization_operator(d: DerivedFrequencies, t: float) -> Hermitian2:
    """I_H(t) = I·H(t)/H, projeção do spin na direção instantânea do campo"""
    if d.omega_bar <= 0:
        raise DomainError("I_H indefinido para campo nulo (ω̄ = 0)")
    phase = d.omega * t
    return Hermitian2(
        0.5
        * (
            d.omega0 * PAULI_Z
            + d.omega1 * math.cos(phase) * PAULI_X
            - d.omega1 * math.sin(phase) * PAULI_Y
        )
        / d.omega_bar
    )


def frame_transform(d: DerivedFrequencies, frame: FrameLabel, t: float) -> Unitary2:
    """T(t) com Ψ_(α,β) = e^{−I_yβ/(iħ)} e^{−I_zα/(iħ)} Ψ = R_y(−β) R_z(−α) Ψ"""
    return product(rot_y(-frame.beta), rot_z(-frame.alpha_at(d.omega, t)))


def frame_hamiltonian(d: DerivedFrequencies, frame: FrameLabel, t: float) -> Hermitian2:
    """
    Hamiltoniano efetivo no referencial (α, β)

        H_(α,β) = T H T† + i (dT/dt) T† = T H T† − α̇ R_y(−β) I_z R_y(β)

    Para α = −ωt: β = 0 dá −(ω₀ − ω)I_z − ω₁I_x, β = Θ dá −ΩI_z.
    """
    transform = frame_transform(d, frame, t)
    shift = Hermitian2(0.5 * PAULI_Z).conjugated(rot_y(-frame.beta))
    moved = instantaneous_hamiltonian(d, t).conjugated(transform)
    return Hermitian2(moved.entries - frame.alpha_rate(d.omega) * shift.entries)


def dynamical_frame(d: DerivedFrequencies) -> FrameLabel:
    """Referencial (−ωt, Θ), onde o Hamiltoniano é −ΩI_z"""
    return FrameLabel(alpha_mode=AlphaMode.CO_ROTATING, beta=d.theta_cap)


def rotating_field_frame(d: DerivedFrequencies) -> FrameLabel:
    """Referencial (−ωt, ϑ) que acompanha H(t)"""
    return FrameLabel(alpha_mode=AlphaMode.CO_ROTATING, beta=d.theta)
