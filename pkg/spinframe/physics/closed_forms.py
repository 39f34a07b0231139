"""
Probabilidades de transição W(−1/2, +1/2) em forma fechada

Todas as funções aceitam τ escalar (retornam float) ou array (retornam ndarray).
As amplitudes são avaliadas como razões de frequências; as formas angulares
(sin²Γ, sin²Θ) existem apenas para os testes de igualdade.
"""

from typing import Callable, Union

import numpy as np

from spinframe.config import numerics
from spinframe.core.exceptions import DegenerateDetuningError, DomainError
from spinframe.schemas.curve import ProbabilityPoint
from spinframe.schemas.field import DerivedFrequencies

TauLike = Union[float, np.ndarray]
Formula = Callable[[DerivedFrequencies, TauLike], TauLike]


def _taus(tau: TauLike) -> np.ndarray:
    values = np.asarray(tau, dtype=float)
    if not np.all(np.isfinite(values)) or np.any(values < 0):
        raise DomainError("τ deve ser finito e não negativo")
    return values


def _result(values: np.ndarray, tau: TauLike) -> TauLike:
    if np.ndim(tau) == 0:
        return float(values)
    return values


def _require_rabi(d: DerivedFrequencies) -> None:
    if not d.big_omega > 0:
        raise DegenerateDetuningError("Ω = 0: fórmula indefinida")


def _require_field(d: DerivedFrequencies) -> None:
    if not d.omega_bar > 0:
        raise DomainError("ω̄ = 0: fórmula indefinida para campo nulo")


def w1937(d: DerivedFrequencies, tau: TauLike) -> TauLike:
    """(ωω₁/(ω̄Ω))² sin²(Ωτ/2), projeção na base do campo girante"""
    _require_rabi(d)
    _require_field(d)
    taus = _taus(tau)
    amplitude = ((d.omega / d.omega_bar) * (d.omega1 / d.big_omega)) ** 2
    return _result(amplitude * np.sin(d.big_omega * taus / 2) ** 2, tau)


def w1954(d: DerivedFrequencies, tau: TauLike) -> TauLike:
    """(ω₁/Ω)² sin²(Ωτ/2), projeção na base fixa de I_z"""
    _require_rabi(d)
    taus = _taus(tau)
    amplitude = (d.omega1 / d.big_omega) ** 2
    return _result(amplitude * np.sin(d.big_omega * taus / 2) ** 2, tau)


def w_unified(d: DerivedFrequencies, tau: TauLike) -> TauLike:
    """
    Probabilidade com os dois referenciais tratados explicitamente

        (ω₁/Ω)² sin²(Ωτ/2) sin²(ωτ/2)
        + [(ωω₁/(Ωω̄)) sin(Ωτ/2) cos(ωτ/2) − (ω₁/ω̄) cos(Ωτ/2) sin(ωτ/2)]²
    """
    _require_rabi(d)
    _require_field(d)
    taus = _taus(tau)

    dyn = d.big_omega * taus / 2
    kin = d.omega * taus / 2
    cross = (d.omega / d.omega_bar) * (d.omega1 / d.big_omega) * np.sin(dyn) * np.cos(kin) - (
        d.omega1 / d.omega_bar
    ) * np.cos(dyn) * np.sin(kin)
    values = (d.omega1 / d.big_omega) ** 2 * np.sin(dyn) ** 2 * np.sin(kin) ** 2 + cross**2
    return _result(values, tau)


def w_resonance(d: DerivedFrequencies, tau: TauLike) -> TauLike:
    """
    Forma especializada em ω = ω₀ (Ω = ω₁)

        sin²(Ωτ/2) sin²(ωτ/2) + [(ω/ω̄) sin(Ωτ/2) cos(ωτ/2) − (Ω/ω̄) cos(Ωτ/2) sin(ωτ/2)]²

    Raises:
        DomainError: fora da variedade de ressonância |ω − ω₀| ≤ 1e-9·max(ω, ω₀)
    """
    scale = max(abs(d.omega), abs(d.omega0))
    if abs(d.omega - d.omega0) > numerics.RESONANCE_RTOL * scale:
        raise DomainError(
            f"w_resonance exige ω = ω₀ (ω={d.omega:.17g}, ω₀={d.omega0:.17g}); use w_unified"
        )
    _require_rabi(d)
    _require_field(d)
    taus = _taus(tau)

    dyn = d.big_omega * taus / 2
    kin = d.omega * taus / 2
    cross = (d.omega / d.omega_bar) * np.sin(dyn) * np.cos(kin) - (
        d.big_omega / d.omega_bar
    ) * np.cos(dyn) * np.sin(kin)
    return _result(np.sin(dyn) ** 2 * np.sin(kin) ** 2 + cross**2, tau)


def w_weak_resonance(big_omega: float, tau: TauLike) -> TauLike:
    """Forma de Rabi convencional sin²(Ωτ/2), limite ω₁ ≪ ω₀ na ressonância"""
    if not big_omega > 0:
        raise DomainError(f"Ω deve ser positivo, recebido {big_omega}")
    taus = _taus(tau)
    return _result(np.sin(big_omega * taus / 2) ** 2, tau)


def w_second_resonance(omega: float, tau: TauLike) -> TauLike:
    """sin⁴(ωτ/2), segunda ressonância em ω = ω₀ = ω₁"""
    if not omega > 0:
        raise DomainError(f"ω deve ser positivo, recebido {omega}")
    taus = _taus(tau)
    return _result(np.sin(omega * taus / 2) ** 4, tau)


def complement(w: TauLike) -> TauLike:
    """Probabilidade de permanência 1 − W para dois níveis"""
    values = np.asarray(w, dtype=float)
    slack = numerics.PROBABILITY_SLACK
    if not np.all(np.isfinite(values)) or np.any(values < -slack) or np.any(values > 1 + slack):
        raise DomainError("Probabilidade fora de [0, 1]")
    return _result(1.0 - values, w)


def w1937_angle(d: DerivedFrequencies, tau: TauLike) -> TauLike:
    """sin²Γ sin²(Ωτ/2)"""
    taus = _taus(tau)
    return _result(np.sin(d.gamma_cap) ** 2 * np.sin(d.big_omega * taus / 2) ** 2, tau)


def w1954_angle(d: DerivedFrequencies, tau: TauLike) -> TauLike:
    """sin²Θ sin²(Ωτ/2)"""
    taus = _taus(tau)
    return _result(np.sin(d.theta_cap) ** 2 * np.sin(d.big_omega * taus / 2) ** 2, tau)


FORMULAS: dict[str, Formula] = {
    "w1937": w1937,
    "w1954": w1954,
    "w_unified": w_unified,
}


def peak(formula: Formula, d: DerivedFrequencies, taus: np.ndarray) -> ProbabilityPoint:
    """Maior valor da fórmula na grade de τ e onde ele ocorre (primeira ocorrência)"""
    values = np.asarray(formula(d, taus))
    index = int(np.argmax(values))
    return ProbabilityPoint(tau=float(taus[index]), value=float(values[index]))


def local_maxima(values: np.ndarray) -> np.ndarray:
    """Índices i interiores com values[i-1] < values[i] >= values[i+1]"""
    v = np.asarray(values, dtype=float)
    if v.size < 3:
        return np.array([], dtype=int)
    rising = v[1:-1] > v[:-2]
    not_falling = v[1:-1] >= v[2:]
    return np.flatnonzero(rising & not_falling) + 1


def rabi_window(d: DerivedFrequencies, cycles: int, samples: int) -> np.ndarray:
    """Grade τ ∈ [0, 2π·cycles/Ω] com `samples` pontos"""
    _require_rabi(d)
    return np.linspace(0.0, 2 * np.pi * cycles / d.big_omega, samples)
