"""
Schemas para o campo magnético girante e as frequências derivadas
"""

import math

from pydantic import BaseModel, ConfigDict, Field


class FieldParams(BaseModel):
    """
    Entradas físicas do campo H(t) = H(cos φ sin ϑ, sin φ sin ϑ, cos ϑ), φ = −ωt

    Frequências em rad/s, tempo em s.
    """

    model_config = ConfigDict(
        frozen=True,
        allow_inf_nan=False,
        json_schema_extra={
            "example": {"gamma": 1.0, "H": 2.0, "theta": 1.0471975511965976, "omega": 1.7}
        },
    )

    gamma: float = Field(1.0, gt=0, description="Razão giromagnética γ (rad/s por unidade)")
    H: float = Field(..., ge=0, description="Amplitude do campo")
    theta: float = Field(..., ge=0, le=math.pi, description="Ângulo polar ϑ do campo (rad)")
    omega: float = Field(..., ge=0, description="Frequência de rotação ω do campo (rad/s)")


class DerivedFrequencies(BaseModel):
    """Frequências e ângulos consumidos pelas fórmulas"""

    model_config = ConfigDict(frozen=True)

    omega_bar: float = Field(..., description="ω̄ = γH")
    omega0: float = Field(..., description="ω₀ = ω̄ cos ϑ")
    omega1: float = Field(..., description="ω₁ = ω̄ sin ϑ")
    omega: float = Field(..., description="Frequência de rotação ω")
    big_omega: float = Field(..., description="Frequência de Rabi Ω")
    theta_cap: float = Field(..., description="Θ, com tan Θ = ω₁/(ω₀ − ω), Θ ∈ [0, π]")
    gamma_cap: float = Field(..., description="Γ = Θ − ϑ")
    theta: float = Field(..., description="ϑ")

    def as_metadata(self) -> dict[str, float]:
        """Campos na ordem usada nos comentários '# key=value' do CSV"""
        return {
            "omega0": self.omega0,
            "omega1": self.omega1,
            "omega": self.omega,
            "omega_bar": self.omega_bar,
            "theta": self.theta,
            "big_omega": self.big_omega,
            "theta_cap": self.theta_cap,
            "gamma_cap": self.gamma_cap,
        }
