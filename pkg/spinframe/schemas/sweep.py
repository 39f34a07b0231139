"""
Schema para varreduras de parâmetro da CLI
"""

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from spinframe.config import numerics
from spinframe.schemas.field import FieldParams


class SweepVariable(str, Enum):
    """Variável varrida"""

    OMEGA = "omega"
    TAU = "tau"
    THETA = "theta"


class SweepSpec(BaseModel):
    """
    Varredura de uma variável mantendo os demais parâmetros fixos

    Para omega e theta cada linha reporta o pico de cada fórmula em
    τ ∈ [0, 2π·cycles/Ω]; para tau cada linha é a probabilidade no próprio τ.
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    variable: SweepVariable
    start: float
    stop: float
    steps: int = Field(..., ge=2, description="Número de pontos da varredura")
    fixed: FieldParams = Field(..., description="Parâmetros mantidos fixos")
    cycles: int = Field(numerics.DEFAULT_CYCLES, ge=1, description="Períodos de Rabi na janela")
    samples: int = Field(
        numerics.DEFAULT_SAMPLES, ge=2, description="Pontos da grade de τ por linha"
    )

    @model_validator(mode="after")
    def check_range(self) -> "SweepSpec":
        if not self.start < self.stop:
            raise ValueError(f"start ({self.start}) deve ser menor que stop ({self.stop})")
        if self.variable is SweepVariable.THETA and not (0 <= self.start and self.stop <= math.pi):
            raise ValueError("Varredura de theta deve ficar em [0, π]")
        if self.variable in (SweepVariable.OMEGA, SweepVariable.TAU) and self.start < 0:
            raise ValueError(f"Varredura de {self.variable.value} não aceita valores negativos")
        return self
