"""
Oráculo numérico: integração da equação de Schrödinger no laboratório

    i dΨ/dt = H(t) Ψ,  H(t) = −[ω₀I_z + ω₁(I_x cos ωt − I_y sin ωt)]

O Hamiltoniano é montado aqui diretamente a partir dessa expressão, sem passar
pelos propagadores fechados, para que a comparação seja independente.

Os passos de um segmento são gerados de uma vez como pilha (N, 2, 2) e reduzidos
por produtos aos pares (árvore), em blocos de REDUCTION_CHUNK passos.
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.linalg import expm

from spinframe.config import numerics
from spinframe.core.exceptions import DomainError
from spinframe.core.logging import app_logger as logger
from spinframe.physics.propagators import rotating_basis
from spinframe.physics.su2 import Spinor, Unitary2, basis_state
from spinframe.schemas.field import DerivedFrequencies
from spinframe.schemas.integrator import IntegratorConfig, Scheme

_EYE = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class Trajectory:
    """Estados Ψ(t) amostrados em tempos crescentes"""

    times: np.ndarray
    states: list[Spinor]

    def __post_init__(self):
        if len(self.times) != len(self.states):
            raise DomainError("times e states devem ter o mesmo comprimento")

    @property
    def final(self) -> Spinor:
        return self.states[-1]


# ============================================================================
# Passos elementares
# ============================================================================


def _hamiltonian_stack(d: DerivedFrequencies, times: np.ndarray) -> np.ndarray:
    """H(t) para cada t, shape (N, 2, 2)"""
    phase = np.exp(1j * d.omega * times)
    h = np.empty((times.size, 2, 2), dtype=complex)
    h[:, 0, 0] = -0.5 * d.omega0
    h[:, 1, 1] = 0.5 * d.omega0
    h[:, 0, 1] = -0.5 * d.omega1 * phase
    h[:, 1, 0] = -0.5 * d.omega1 * np.conj(phase)
    return h


def _midpoint_steps(d: DerivedFrequencies, starts: np.ndarray, h: float) -> np.ndarray:
    """exp(−i h H(t + h/2)), exatamente unitário"""
    return expm(-1j * h * _hamiltonian_stack(d, starts + h / 2))


def _rk4_steps(d: DerivedFrequencies, starts: np.ndarray, h: float) -> np.ndarray:
    """Matriz de avanço do RK4 clássico para a EDO linear dU/dt = −iH(t)U"""
    a1 = -1j * _hamiltonian_stack(d, starts)
    a2 = -1j * _hamiltonian_stack(d, starts + h / 2)
    a3 = -1j * _hamiltonian_stack(d, starts + h)

    k1 = a1
    k2 = a2 @ (_EYE + (h / 2) * k1)
    k3 = a2 @ (_EYE + (h / 2) * k2)
    k4 = a3 @ (_EYE + h * k3)
    return _EYE + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)


_STEPPERS: dict[Scheme, Callable[[DerivedFrequencies, np.ndarray, float], np.ndarray]] = {
    Scheme.MIDPOINT: _midpoint_steps,
    Scheme.RK4: _rk4_steps,
}


def _ordered_product(stack: np.ndarray) -> np.ndarray:
    """M[N−1] ··· M[1] M[0] por redução em árvore"""
    while stack.shape[0] > 1:
        if stack.shape[0] % 2:
            paired = stack[1:-1:2] @ stack[0:-1:2]
            stack = np.concatenate([paired, stack[-1:]])
        else:
            stack = stack[1::2] @ stack[0::2]
    return stack[0]


def _segment(
    d: DerivedFrequencies, start: float, stop: float, dt: float, scheme: Scheme
) -> np.ndarray:
    """Propagador numérico de start a stop com passos iguais h ≤ dt"""
    span = stop - start
    if span == 0.0:
        return _EYE.copy()

    n_steps = max(1, math.ceil(span / dt))
    h = span / n_steps
    stepper = _STEPPERS[scheme]
    chunk = numerics.REDUCTION_CHUNK

    result = _EYE.copy()
    for first in range(0, n_steps, chunk):
        indices = np.arange(first, min(first + chunk, n_steps))
        steps = stepper(d, start + indices * h, h)
        result = _ordered_product(steps) @ result

    logger.debug(
        f"Segmento [{start:.6g}, {stop:.6g}]: {n_steps} passos {scheme.value} "
        f"(h={h:.3e}, blocos de {chunk})"
    )
    return result


# ============================================================================
# Operações
# ============================================================================


def propagate(
    d: DerivedFrequencies,
    t1: float,
    times,
    cfg: Optional[IntegratorConfig] = None,
) -> list[Unitary2]:
    """
    Propagador numérico U(t_k, t1) no laboratório para cada tempo amostrado

    Args:
        d: Frequências derivadas
        t1: Instante inicial
        times: Tempos de amostragem, não decrescentes e ≥ t1
        cfg: Configuração do integrador (padrão: midpoint-exponential, dt padrão)

    Returns:
        Lista de Unitary2, um por tempo

    Raises:
        DomainError: tempos não finitos, fora de ordem ou anteriores a t1
        ConfigurationError: dt viola a guarda de resolução
    """
    cfg = cfg or IntegratorConfig()
    samples = np.asarray(times, dtype=float).reshape(-1)
    if not math.isfinite(t1) or not np.all(np.isfinite(samples)):
        raise DomainError("Tempos de amostragem não finitos")
    if samples.size and (samples[0] < t1 or np.any(np.diff(samples) < 0)):
        raise DomainError("Tempos de amostragem devem ser não decrescentes e ≥ t1")

    dt = cfg.step_for(d)
    logger.debug(f"Integrando {samples.size} amostras a partir de t1={t1:.6g} com dt={dt:.3e}")

    propagators = []
    current, previous = _EYE.copy(), t1
    for t in samples:
        current = _segment(d, previous, float(t), dt, cfg.scheme) @ current
        propagators.append(Unitary2(current))
        previous = float(t)
    return propagators


def integrate(
    d: DerivedFrequencies,
    psi0: Spinor,
    t1: float,
    t2: float,
    cfg: Optional[IntegratorConfig] = None,
    samples: int = 2,
) -> Trajectory:
    """
    Evolui psi0 de t1 a t2, amostrando `samples` tempos igualmente espaçados

    Raises:
        DomainError: psi0 não normalizado ou t2 < t1
        ConfigurationError: dt viola a guarda de resolução
    """
    if not psi0.is_normalized():
        raise DomainError(f"Estado inicial não normalizado (|ψ|² = {psi0.norm2:.15g})")
    if not (math.isfinite(t1) and math.isfinite(t2)) or t2 < t1:
        raise DomainError(f"Intervalo inválido: t1={t1}, t2={t2}")
    if samples < 2:
        raise DomainError(f"samples deve ser ≥ 2, recebido {samples}")

    if t2 == t1:
        return Trajectory(times=np.array([t1]), states=[psi0])

    times = np.linspace(t1, t2, samples)
    times[-1] = t2
    states = [u @ psi0 for u in propagate(d, t1, times, cfg)]
    return Trajectory(times=times, states=states)


# ============================================================================
# Prescrições de projeção
# ============================================================================

BasisChoice = Callable[[DerivedFrequencies, float, float], Spinor]

# (estado inicial |−1/2⟩, estado medido |+1/2⟩), ambos como função de (d, t1, t2)
PRESCRIPTIONS: dict[str, tuple[BasisChoice, BasisChoice]] = {
    "w1954": (
        lambda d, t1, t2: basis_state(-0.5),
        lambda d, t1, t2: basis_state(0.5),
    ),
    "w1937": (
        lambda d, t1, t2: rotating_basis(d, t1, -0.5),
        lambda d, t1, t2: rotating_basis(d, t2, 0.5),
    ),
    "w_unified": (
        lambda d, t1, t2: rotating_basis(d, t2, -0.5),
        lambda d, t1, t2: rotating_basis(d, t2, 0.5),
    ),
}


def _oracle(
    name: str, d: DerivedFrequencies, t1: float, t2: float, cfg: Optional[IntegratorConfig]
) -> float:
    initial_of, final_of = PRESCRIPTIONS[name]
    initial = initial_of(d, t1, t2)
    final = integrate(d, initial, t1, t2, cfg).final
    return abs(final_of(d, t1, t2).inner(final)) ** 2


def oracle_w_unified(
    d: DerivedFrequencies, t1: float, t2: float, cfg: Optional[IntegratorConfig] = None
) -> float:
    """Estados inicial e medido na base do campo no instante de observação t2"""
    return _oracle("w_unified", d, t1, t2, cfg)


def oracle_w1954(
    d: DerivedFrequencies, t1: float, t2: float, cfg: Optional[IntegratorConfig] = None
) -> float:
    """Base fixa de I_z nos dois extremos"""
    return _oracle("w1954", d, t1, t2, cfg)


def oracle_w1937(
    d: DerivedFrequencies, t1: float, t2: float, cfg: Optional[IntegratorConfig] = None
) -> float:
    """Base que acompanha o campo: inicial em t1, medida em t2"""
    return _oracle("w1937", d, t1, t2, cfg)


def oracle_curves(
    d: DerivedFrequencies,
    t1: float,
    taus: np.ndarray,
    cfg: Optional[IntegratorConfig] = None,
) -> dict[str, np.ndarray]:
    """
    As três prescrições sobre uma grade de τ com uma única integração

    Returns:
        {"oracle_w1937": ..., "oracle_w1954": ..., "oracle_w_unified": ...}
    """
    taus = np.asarray(taus, dtype=float)
    if np.any(taus < 0):
        raise DomainError("τ deve ser não negativo")
    curves = {f"oracle_{name}": np.empty(taus.size) for name in ("w1937", "w1954", "w_unified")}
    for k, (tau, u) in enumerate(zip(taus, propagate(d, t1, t1 + taus, cfg))):
        t2 = t1 + float(tau)
        for name, (initial_of, final_of) in PRESCRIPTIONS.items():
            evolved = u @ initial_of(d, t1, t2)
            curves[f"oracle_{name}"][k] = abs(final_of(d, t1, t2).inner(evolved)) ** 2
    return curves
