"""
Leitura e escrita dos CSVs de curvas

Formato:
    # key=value        (metadados, um por linha, na ordem de inserção)
    tau,w1937,...      (cabeçalho)
    0,0,...            (dados, floats com 17 dígitos significativos)

Nenhum campo depende de relógio ou ambiente: as mesmas flags geram os mesmos bytes.
"""

import io
import sys
from pathlib import Path
from typing import Any, Mapping, Optional, Union

import numpy as np
import pandas as pd
from pydantic import ValidationError

from spinframe.config import numerics
from spinframe.core.exceptions import CurveFormatError
from spinframe.core.logging import app_logger as logger
from spinframe.schemas.curve import TransitionCurve

ABSCISSAE = ("tau", "omega", "theta")

PathLike = Union[str, Path]


def format_value(value: Any) -> str:
    """Representação textual estável de um metadado"""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (float, np.floating)):
        return numerics.CSV_FLOAT_FORMAT % value
    return str(value)


def render_frame(meta: Mapping[str, Any], frame: pd.DataFrame) -> str:
    """Metadados + cabeçalho + dados como texto com terminador '\\n'"""
    header = "".join(f"# {key}={format_value(value)}\n" for key, value in meta.items())
    body = frame.to_csv(
        index=False, float_format=numerics.CSV_FLOAT_FORMAT, lineterminator="\n"
    )
    return header + body


def write_frame(meta: Mapping[str, Any], frame: pd.DataFrame, out: Optional[PathLike]) -> None:
    """
    Escreve o CSV em `out` ou, se None, em stdout

    Args:
        meta: Metadados ordenados
        frame: Tabela de dados
        out: Caminho de saída (None = stdout)
    """
    text = render_frame(meta, frame)
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return

    path = Path(out)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    logger.info(f"CSV escrito: {path} ({len(frame)} linhas)")


def write_curve(curve: TransitionCurve, out: Optional[PathLike]) -> None:
    """Escreve a curva com as probabilidades limitadas a [0, 1]"""
    rows = curve.rows.copy()
    columns = curve.probability_columns
    rows[columns] = rows[columns].clip(lower=0.0, upper=1.0)
    write_frame(curve.meta, rows, out)


def read_curve(path: PathLike) -> TransitionCurve:
    """
    Lê um CSV gerado por evolve/sweep

    Raises:
        CurveFormatError: arquivo ausente, cabeçalho fora do formato ou dados inválidos
    """
    path = Path(path)
    if not path.is_file():
        raise CurveFormatError(f"Arquivo não encontrado: {path}")

    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CurveFormatError(f"Não foi possível ler {path}: {exc}") from exc

    meta: dict[str, str] = {}
    body: list[str] = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, sep, value = line[1:].strip().partition("=")
            if not sep or not key:
                raise CurveFormatError(f"Metadado malformado em {path}: {line!r}")
            meta[key] = value
        elif line.strip():
            body.append(line)

    if not body:
        raise CurveFormatError(f"{path} não contém cabeçalho")

    try:
        rows = pd.read_csv(io.StringIO("\n".join(body)), dtype=float)
    except ValueError as exc:
        raise CurveFormatError(f"Dados inválidos em {path}: {exc}") from exc

    if rows.columns[0] not in ABSCISSAE:
        raise CurveFormatError(
            f"Primeira coluna de {path} deve ser uma de {ABSCISSAE}, encontrada '{rows.columns[0]}'"
        )
    if rows.empty:
        raise CurveFormatError(f"{path} não contém linhas de dados")

    try:
        return TransitionCurve(meta=meta, rows=rows)
    except ValidationError as exc:
        raise CurveFormatError(f"Curva inválida em {path}: {exc}") from exc
