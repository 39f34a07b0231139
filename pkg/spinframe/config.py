"""
Configurações do spinframe usando Pydantic Settings
Variáveis de ambiente controlam apenas o diagnóstico (logs); a parte numérica é fixa
"""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Configurações globais de execução"""

    # Informações do Projeto
    PROJECT_NAME: str = "spinframe"
    VERSION: str = "1.0.0"
    ENVIRONMENT: str = "development"
    DEBUG: bool = False

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: Literal["text", "json"] = "text"
    LOG_FILE: Optional[str] = None

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Aceita níveis em minúsculas (ex: 'debug')"""
        return str(v).upper()

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", case_sensitive=True, extra="ignore"
    )


class NumericalDefaults(BaseModel):
    """
    Constantes numéricas do pacote.

    Não são lidas do ambiente: o mesmo conjunto de flags sempre produz o mesmo resultado.
    """

    model_config = ConfigDict(frozen=True)

    # Integrador
    DT_FACTOR: float = 1e-4
    RESOLUTION_LIMIT: float = 0.5
    REDUCTION_CHUNK: int = 65536

    # Tolerâncias
    COMPARE_TOL: float = 1e-6
    NORM_TOL: float = 1e-12
    RESONANCE_RTOL: float = 1e-9
    PROBABILITY_SLACK: float = 1e-12

    # Saída CSV
    CSV_FLOAT_FORMAT: str = "%.17g"
    DEFAULT_SAMPLES: int = 201
    DEFAULT_CYCLES: int = 4
    COMPARE_SAMPLES: int = 11


# Instâncias globais
settings = Settings()
numerics = NumericalDefaults()
