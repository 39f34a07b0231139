"""
Schemas para curvas de probabilidade (payload dos CSVs)
"""

import math
from typing import Any

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from spinframe.config import numerics


class ProbabilityPoint(BaseModel):
    """Probabilidade em um tempo de evolução τ = t₂ − t₁"""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    tau: float = Field(..., ge=0, description="Tempo de evolução τ (s)")
    value: float = Field(..., description="Probabilidade")

    @field_validator("value")
    @classmethod
    def check_probability(cls, v: float) -> float:
        slack = numerics.PROBABILITY_SLACK
        if not math.isfinite(v) or not -slack <= v <= 1 + slack:
            raise ValueError(f"Probabilidade fora de [0, 1]: {v}")
        return v


class TransitionCurve(BaseModel):
    """
    Série amostrada abscissa ↦ probabilidades com metadados

    A primeira coluna do DataFrame é a abscissa (tau, omega ou theta); as demais são
    probabilidades.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    meta: dict[str, Any] = Field(default_factory=dict, description="Registro dos parâmetros")
    rows: pd.DataFrame

    @model_validator(mode="after")
    def check_rows(self) -> "TransitionCurve":
        if self.rows.shape[1] < 2:
            raise ValueError("A curva precisa de abscissa e ao menos uma probabilidade")

        abscissa = self.rows.iloc[:, 0].to_numpy(dtype=float)
        if np.any(np.diff(abscissa) <= 0):
            raise ValueError(f"Abscissa '{self.abscissa}' deve ser estritamente crescente")

        slack = numerics.PROBABILITY_SLACK
        values = self.rows.iloc[:, 1:].to_numpy(dtype=float)
        if not np.all(np.isfinite(values)):
            raise ValueError("Probabilidades não finitas na curva")
        if np.any(values < -slack) or np.any(values > 1 + slack):
            raise ValueError("Probabilidades fora de [0, 1]")
        return self

    @property
    def abscissa(self) -> str:
        return str(self.rows.columns[0])

    @property
    def probability_columns(self) -> list[str]:
        return [str(c) for c in self.rows.columns[1:]]
