"""
Gerador de scripts de plotagem para curvas CSV

O script gerado lê o CSV pelo caminho e referencia as colunas pelo nome;
nenhum dado é copiado para ele.
"""

from pathlib import Path

from spinframe.schemas.curve import TransitionCurve

AXIS_LABELS = {
    "tau": "τ (s)",
    "omega": "ω (rad/s)",
    "theta": "ϑ (rad)",
}

_TEMPLATE = '''"""
Gráfico de {csv_name} gerado por spinframe plotscript
Requer pandas e matplotlib
"""

import matplotlib.pyplot as plt
import pandas as pd

CSV_PATH = {csv_path!r}

frame = pd.read_csv(CSV_PATH, comment="#")

fig, ax = plt.subplots(figsize=(8, 4.5))
{plot_lines}
ax.set_xlabel({xlabel!r})
ax.set_ylabel("probabilidade de transição")
ax.set_ylim(-0.02, 1.02)
ax.grid(alpha=0.3)
ax.legend()
fig.tight_layout()
fig.savefig({png_path!r}, dpi=150)
plt.show()
'''


def default_script_path(csv_path: Path) -> Path:
    """curve.csv -> curve.plot.py"""
    return csv_path.with_suffix(".plot.py")


def render_plot_script(curve: TransitionCurve, csv_path: Path) -> str:
    """Texto do script para a curva já validada em csv_path"""
    abscissa = curve.abscissa
    plot_lines = "\n".join(
        f"ax.plot(frame[{abscissa!r}], frame[{column!r}], label={column!r})"
        for column in curve.probability_columns
    )
    return _TEMPLATE.format(
        csv_name=csv_path.name,
        csv_path=str(csv_path),
        plot_lines=plot_lines,
        xlabel=AXIS_LABELS.get(abscissa, abscissa),
        png_path=str(csv_path.with_suffix(".png")),
    )
