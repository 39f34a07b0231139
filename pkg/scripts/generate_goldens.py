"""
Script para regenerar as curvas de referência em tests/fixtures/golden
Executa os mesmos comandos da CLI que tests/test_cli.py compara
"""

import math
import sys
from pathlib import Path

from loguru import logger

# Adicionar diretório raiz ao path
sys.path.insert(0, str(Path(__file__).parent.parent))

from spinframe.main import EXIT_OK, run  # noqa: E402

GOLDEN_DIR = Path(__file__).parent.parent / "tests" / "fixtures" / "golden"

# nome do arquivo -> argumentos da CLI (sem --out)
GOLDENS = {
    "evolve_weak_resonance.csv": [
        "evolve", "--omega0", "1", "--omega1", "0.01", "--omega", "1",
        "--tau-max", repr(2 * math.pi / 0.01), "--samples", "9",
    ],
    "evolve_strong_driving.csv": [
        "evolve", "--omega0", "1", "--omega1", "0.5", "--omega", "1",
        "--tau-max", repr(4 * math.pi), "--samples", "17",
    ],
    "evolve_second_resonance.csv": [
        "evolve", "--omega0", "1", "--omega1", "1", "--omega", "1",
        "--tau-max", repr(2 * math.pi), "--samples", "17",
    ],
    "sweep_omega_strong.csv": [
        "sweep", "--omega0", "1", "--omega1", "0.5", "--variable", "omega",
        "--start", "0.8", "--stop", "1.0", "--steps", "5", "--samples", "2001",
    ],
}  # fmt: skip


def main():
    """Função principal"""
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)

    failed = []
    for name, argv in GOLDENS.items():
        target = GOLDEN_DIR / name
        logger.info(f"Gerando {target.name}...")
        if run([*argv, "--out", str(target)]) != EXIT_OK:
            failed.append(name)

    if failed:
        logger.error(f"Falha ao gerar: {', '.join(failed)}")
        sys.exit(1)
    logger.success(f"✅ {len(GOLDENS)} curvas de referência atualizadas em {GOLDEN_DIR}")


if __name__ == "__main__":
    main()
