from __future__ import annotations

import csv
import io
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path
from typing import IO, Any, Callable, Iterable, List, Optional, Sequence, Union

from pydantic import BaseModel

from app.core.errors import PreconditionViolated
from app.models.report import SearchReport, TableRow
from app.services.congruence_search import CurvePoint
from app.services.golden import format_binary

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

SOLUTIONS_HEADER = ["n", "binary", "r", "m"]
CURVE_HEADER = ["x", "value", "series"]


def _format_value(value: Union[int, float]) -> str:
    return str(value) if isinstance(value, int) else f"{value:.6f}"


def write_solutions_csv(report: SearchReport, fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SOLUTIONS_HEADER)
    for n in report.solutions:
        w.writerow([n, format_binary(n), report.r, report.m])


def write_curve_csv(points: Iterable[CurvePoint], fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CURVE_HEADER)
    for p in points:
        w.writerow([p.x, _format_value(p.value), p.series])


def write_table_csv(rows: Sequence[TableRow], fh: IO[str]) -> None:
    """Row cells as columns, then expected and matches when any row carries them."""
    if not rows:
        return
    columns: List[str] = list(rows[0].cells)
    with_expected = any(r.expected is not None for r in rows)
    header = columns + (["expected", "matches"] if with_expected else [])
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        line: List[Any] = ["" if r.cells.get(c) is None else r.cells.get(c) for c in columns]
        if with_expected:
            expected = r.expected if not isinstance(r.expected, dict) else ";".join(f"{k}={v}" for k, v in r.expected.items())
            line += ["" if expected is None else expected, "" if r.matches is None else str(r.matches).lower()]
        w.writerow(line)


def dumps(model: Union[BaseModel, Sequence[BaseModel]]) -> str:
    """Stable JSON: aliases, sorted keys, two-space indent."""
    if isinstance(model, BaseModel):
        data = model.model_dump(mode="json", by_alias=True)
    else:
        data = [m.model_dump(mode="json", by_alias=True) for m in model]
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def dumps_curve(points: Iterable[CurvePoint]) -> str:
    return json.dumps([asdict(p) for p in points], indent=2, sort_keys=True)


def read_solutions_csv(path: PathLike) -> List[int]:
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None or "n" not in reader.fieldnames:
            raise PreconditionViolated(f"{path} has no 'n' column")
        return [int(row["n"]) for row in reader]


def emit(text: str, out: Optional[PathLike] = None) -> None:
    """Write text to out, or to stdout when out is None."""
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("wrote %s", path)


def render(write: Callable[..., None], *args: Any) -> str:
    buf = io.StringIO()
    write(*args, buf)
    return buf.getvalue()
