"""
Hierarquia de exceções do spinframe
A CLI traduz cada família para um código de saída (ver spinframe.main)
"""


class SpinFrameError(Exception):
    """Base de todos os erros do pacote"""


class DomainError(SpinFrameError, ValueError):
    """Entrada fora do domínio de uma operação (ângulo não finito, spinor não normalizado...)"""


class DegenerateDetuningError(DomainError):
    """Ω = 0: ω = ω₀ e ω₁ = 0 ao mesmo tempo, Θ indefinido"""


class ConfigurationError(SpinFrameError, ValueError):
    """Configuração inválida do integrador ou da linha de comando"""


class CurveFormatError(SpinFrameError, ValueError):
    """Arquivo CSV ausente ou sem o cabeçalho documentado"""


class ToleranceExceededError(SpinFrameError):
    """Desvio entre forma fechada e oráculo acima da tolerância"""

    def __init__(self, deviations: dict[str, float], tol: float):
        self.deviations = deviations
        self.tol = tol
        worst = max(deviations, key=deviations.get)
        super().__init__(
            f"Desvio máximo {deviations[worst]:.3e} em '{worst}' excede a tolerância {tol:.1e}"
        )
