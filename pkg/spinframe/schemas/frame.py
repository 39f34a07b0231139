"""
Schema para referenciais de observação (α, β)
"""

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class AlphaMode(str, Enum):
    """Como o ângulo α em torno de z evolui no tempo"""

    FIXED = "fixed"
    CO_ROTATING = "co-rotating"  # α = −ωt


class FrameLabel(BaseModel):
    """
    Referencial obtido girando (0, 0) por α em torno de z e β em torno de y

    Exemplos:
        FrameLabel() -> laboratório (0, 0)
        FrameLabel(alpha_mode="co-rotating", beta=d.theta_cap) -> referencial dinâmico
        FrameLabel(alpha_mode="co-rotating", beta=d.theta) -> referencial do campo girante
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    alpha_mode: AlphaMode = Field(AlphaMode.FIXED, description="α fixo ou α = −ωt")
    alpha: float = Field(0.0, description="α quando alpha_mode = fixed (rad)")
    beta: float = Field(0.0, ge=0, le=math.pi, description="Rotação β em torno de y (rad)")

    def alpha_at(self, omega: float, t: float) -> float:
        """Valor de α no instante t"""
        if self.alpha_mode is AlphaMode.CO_ROTATING:
            return -omega * t
        return self.alpha

    def alpha_rate(self, omega: float) -> float:
        """dα/dt"""
        if self.alpha_mode is AlphaMode.CO_ROTATING:
            return -omega
        return 0.0
