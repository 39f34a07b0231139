"""
Schema de configuração do integrador numérico (oráculo)
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from spinframe.config import numerics
from spinframe.core.exceptions import ConfigurationError
from spinframe.schemas.field import DerivedFrequencies


class Scheme(str, Enum):
    """Esquemas de passo fixo disponíveis"""

    MIDPOINT = "midpoint-exponential"
    RK4 = "rk4"


class IntegratorConfig(BaseModel):
    """Passo e esquema do integrador; dt = None usa o passo padrão para as frequências dadas"""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    dt: Optional[float] = Field(None, gt=0, description="Passo de tempo (s)")
    scheme: Scheme = Field(Scheme.MIDPOINT, description="Esquema de integração")

    def step_for(self, d: DerivedFrequencies) -> float:
        """
        Resolve o passo efetivo e aplica a guarda de resolução

        Args:
            d: Frequências derivadas do problema

        Returns:
            dt em segundos

        Raises:
            ConfigurationError: se dt·ω̄ ou dt·ω não for menor que o limite de resolução
        """
        dt = self.dt if self.dt is not None else default_dt(d)

        limit = numerics.RESOLUTION_LIMIT
        if dt * d.omega_bar >= limit or dt * d.omega >= limit:
            raise ConfigurationError(
                f"dt={dt:.3e} não resolve a dinâmica: dt·ω̄={dt * d.omega_bar:.3f}, "
                f"dt·ω={dt * d.omega:.3f} (limite {limit})"
            )
        return dt


def default_dt(d: DerivedFrequencies) -> float:
    """dt = DT_FACTOR · min(1/ω̄, 1/ω, 1/Ω), ignorando frequências nulas"""
    rates = [f for f in (d.omega_bar, d.omega, d.big_omega) if f > 0]
    if not rates:
        raise ConfigurationError("Nenhuma frequência positiva para escolher o passo")
    return numerics.DT_FACTOR / max(rates)
