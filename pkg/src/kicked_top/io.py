"""Fixed-format CSV/JSON output. Numbers use 12 significant digits, LF endings."""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import Iterable, Sequence

TRAJECTORY_COLUMNS = (
    "kick", "jx", "jy", "jz", "fid_A", "fid_Ap",
    "corr_A", "corr_Ap", "corr_E", "corr_Ep", "purity",
)
FID_LABELS = ("A", "A'")
CORR_LABELS = ("A", "A'", "E", "E'")


def fmt(x) -> str:
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x == 0.0:
        x = 0.0  # drop the sign of -0.0
    return f"{x:.11e}"


def column_key(label: str) -> str:
    return label.replace("'", "p")


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    lines = [",".join(header)]
    lines += [",".join(c if isinstance(c, str) else fmt(c) for c in row) for row in rows]
    return "\n".join(lines) + "\n"


def write_text(path: str | Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def trajectory_rows(records) -> list[list]:
    rows = []
    for r in records:
        rows.append(
            [r.kick, r.jx, r.jy, r.jz]
            + [r.fid[s] for s in FID_LABELS]
            + [r.corr[s] for s in CORR_LABELS]
            + [r.purity]
        )
    return rows


def trajectory_csv(records) -> str:
    return render_csv(TRAJECTORY_COLUMNS, trajectory_rows(records))


def trajectory_json(records, config: dict | None = None) -> str:
    payload = {
        "columns": list(TRAJECTORY_COLUMNS),
        "rows": [[fmt(v) if not isinstance(v, int) else v for v in row] for row in trajectory_rows(records)],
    }
    if config is not None:
        payload["config"] = config
    return json.dumps(payload, indent=1, sort_keys=True) + "\n"


def read_csv_column(path: str | Path, column: str) -> list[float]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or column not in reader.fieldnames:
            raise KeyError(column)
        return [float(row[column]) for row in reader]


def portrait_csv(portrait) -> str:
    rows = zip(portrait.traj_id.tolist(), portrait.iteration.tolist(),
               portrait.theta.tolist(), portrait.phi.tolist())
    return render_csv(("traj_id", "iter", "theta", "phi"), rows)


def spectrum_csv(result) -> str:
    return render_csv(("freq", "amplitude"), zip(result.frequencies.tolist(), result.amplitudes.tolist()))
