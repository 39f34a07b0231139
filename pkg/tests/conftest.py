import sys
from pathlib import Path

import numpy as np
import pytest

# Adiciona o diretório raiz ao sys.path para que o pytest encontre o pacote 'spinframe'
sys.path.insert(0, str(Path(__file__).parent.parent))

from spinframe.physics.model import derive  # noqa: E402
from spinframe.schemas.field import FieldParams  # noqa: E402

GOLDEN_DIR = Path(__file__).parent / "fixtures" / "golden"


@pytest.fixture
def rng():
    """Gerador determinístico para os protocolos de amostragem aleatória"""
    return np.random.default_rng(42)


@pytest.fixture
def random_frequencies(rng):
    """
    Fábrica de DerivedFrequencies aleatórias

    Uso: d = random_frequencies(omega_bar=(0.1, 10), omega=(0, 10))
    ϑ é sorteado em (0, π) longe das bordas.
    """

    def factory(omega_bar=(0.1, 10.0), omega=(0.0, 10.0), theta=(0.01, np.pi - 0.01)):
        params = FieldParams(
            gamma=1.0,
            H=float(rng.uniform(*omega_bar)),
            theta=float(rng.uniform(*theta)),
            omega=float(rng.uniform(*omega)),
        )
        return derive(params)

    return factory


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR
