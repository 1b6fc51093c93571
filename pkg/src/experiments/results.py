"""
Result rows and their CSV files.

Layout of a trials file::

    # schema=1
    # experiment: same-device-noisy
    # seed: 0
    # ...                      (resolved config as YAML, one "# " line each)
    experiment,instance_id,n,...
    same-device-noisy,gnp-n10-p0.5-s0,10,...

One row per (instance, mode, backend, layers, trial). Failed runs leave a single
row with trial -1 and a non-"ok" status.
"""
import csv
import math
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, Generic, Iterable, List, Optional, Set, Tuple, TypeVar, Union

import pandas as pd
import yaml

from ..config_schemas import ExperimentConfig
from ..errors import LccError, ParseError
from ..logging_config import get_logger

logger = get_logger(__name__)

SCHEMA_VERSION = 1
SCHEMA_LINE = f"# schema={SCHEMA_VERSION}"
STATUS_OK = "ok"
FAILED_TRIAL = -1

T = TypeVar("T")

RunKey = Tuple[str, str, str, int]


@dataclass
class StepResult(Generic[T]):
    """Outcome of one pipeline step: data on success, a status string on failure."""

    success: bool
    data: Optional[T] = None
    error: Optional[str] = None

    @classmethod
    def ok(cls, data: T) -> "StepResult[T]":
        return cls(success=True, data=data)

    @classmethod
    def fail(cls, error: str) -> "StepResult[T]":
        return cls(success=False, error=error)

    @classmethod
    def from_exception(cls, e: Exception) -> "StepResult[T]":
        category = e.category if isinstance(e, LccError) else "error"
        return cls.fail(f"{category}: {e}")


@dataclass
class ResultRow:
    experiment: str
    instance_id: str
    n: int
    num_edges: int
    kind: str
    p: Optional[float]
    d: Optional[int]
    seed: Optional[int]
    mode: str
    backend: str
    layers: int
    entanglement: str
    trial: int
    trial_seed: Optional[int]
    status: str = STATUS_OK
    ar: Optional[float] = None
    expectation: Optional[float] = None
    optimum: Optional[float] = None
    optimum_source: str = ""
    best_sampled_cut: Optional[int] = None
    evals: Optional[int] = None
    budget_exhausted: Optional[bool] = None
    routing: str = ""
    max_subcircuit_qubits: Optional[int] = None
    gw_best_cut: Optional[int] = None
    relaxation_value: Optional[float] = None
    wall_time: Optional[float] = None

    @property
    def key(self) -> RunKey:
        return (self.instance_id, self.mode, self.backend, self.layers)

    def to_record(self) -> Dict[str, Any]:
        record = asdict(self)
        for name, value in record.items():
            if value is None:
                record[name] = ""
            elif isinstance(value, float):
                record[name] = repr(value)
        return record


COLUMNS: Tuple[str, ...] = tuple(f.name for f in fields(ResultRow))
INT_COLUMNS = ("n", "num_edges", "d", "seed", "layers", "trial", "trial_seed",
               "best_sampled_cut", "evals", "max_subcircuit_qubits", "gw_best_cut")
FLOAT_COLUMNS = ("p", "ar", "expectation", "optimum", "relaxation_value", "wall_time")
BEST_GROUP = ["instance_id", "mode", "backend", "layers"]


def config_header(cfg: ExperimentConfig) -> List[str]:
    """Schema line followed by the resolved config as commented YAML."""
    dumped = yaml.safe_dump(cfg.model_dump(mode="json"), sort_keys=False).rstrip("\n")
    return [SCHEMA_LINE] + [f"# {line}" for line in dumped.splitlines()]


def _parse_value(column: str, text: str, line_no: int) -> Any:
    if text == "":
        return None
    try:
        if column in INT_COLUMNS:
            return int(text)
        if column in FLOAT_COLUMNS:
            return float(text)
        if column == "budget_exhausted":
            if text not in ("True", "False"):
                raise ValueError(f"expected True or False, got '{text}'")
            return text == "True"
    except ValueError as e:
        raise ParseError(f"Bad value for '{column}': {e}", field=column, line=line_no) from e
    return text


def read_results(path: Union[str, Path]) -> pd.DataFrame:
    """
    Parse a trials (or best) CSV.

    Raises:
        ParseError: missing or unknown schema line, wrong header, ragged rows or
            non-numeric values, with the 1-based line number
    """
    path = Path(path)
    if not path.exists():
        raise ParseError(f"Results file not found: {path}")
    with open(path, newline="") as f:
        lines = f.read().splitlines()
    if not lines or lines[0].strip() != SCHEMA_LINE:
        raise ParseError(f"{path}: expected '{SCHEMA_LINE}' on the first line", line=1)

    records = []
    header: Optional[List[str]] = None
    for line_no, row in enumerate(csv.reader(lines), start=1):
        if not row or row[0].startswith("#"):
            continue
        if header is None:
            if tuple(row) != COLUMNS:
                raise ParseError(f"{path}: unexpected column header", line=line_no)
            header = row
            continue
        if len(row) != len(header):
            raise ParseError(f"{path}: expected {len(header)} fields, got {len(row)}", line=line_no)
        records.append({c: _parse_value(c, v, line_no) for c, v in zip(header, row)})
    if header is None:
        raise ParseError(f"{path}: no column header", line=len(lines))
    return pd.DataFrame.from_records(records, columns=list(COLUMNS))


def completed_keys(path: Union[str, Path]) -> Set[RunKey]:
    """(instance_id, mode, backend, layers) groups with successful rows in a trials file."""
    if not Path(path).exists():
        return set()
    df = read_results(path)
    df = df[df["status"] == STATUS_OK]
    return {
        (str(r.instance_id), str(r.mode), str(r.backend), int(r.layers))
        for r in df[BEST_GROUP].drop_duplicates().itertuples(index=False)
    }


def best_rows(df: pd.DataFrame) -> pd.DataFrame:
    """
    Best trial per (instance, mode, backend, layers): highest AR, or highest
    expectation when AR is undefined; first trial wins ties.
    """
    ok = df[df["status"] == STATUS_OK].copy()
    if ok.empty:
        return ok
    ok["_score"] = ok["ar"].where(ok["ar"].notna(), ok["expectation"])
    ok = ok.sort_values(BEST_GROUP + ["_score", "trial"], ascending=[True] * 4 + [False, True], kind="mergesort")
    best = ok.groupby(BEST_GROUP, sort=True, as_index=False).head(1)
    return best.drop(columns="_score").reset_index(drop=True)


def check_ar_column(df: pd.DataFrame, tol: float = 1e-12) -> List[int]:
    """Row positions whose AR differs from expectation / optimum."""
    bad = []
    for pos, row in enumerate(df.itertuples(index=False)):
        if row.ar is None or pd.isna(row.ar):
            continue
        if not row.optimum or abs(row.ar - row.expectation / row.optimum) > tol:
            bad.append(pos)
    return bad


class ResultsWriter:
    """
    Append-only trials CSV, written by a single process.

    A new file gets the schema line, the config header and the column line. An
    existing file is appended to after its schema is checked.
    """

    def __init__(self, path: Union[str, Path], cfg: ExperimentConfig):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.done = completed_keys(self.path)
        is_new = not self.path.exists()
        self._file = open(self.path, "a", newline="")
        self._writer = csv.DictWriter(self._file, fieldnames=list(COLUMNS))
        if is_new:
            for line in config_header(cfg):
                self._file.write(line + "\n")
            self._writer.writeheader()
            self._file.flush()
        self.rows_written = 0

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def write_rows(self, rows: Iterable[ResultRow]) -> None:
        for row in rows:
            self._writer.writerow(row.to_record())
            if row.status == STATUS_OK:
                self.done.add(row.key)
            self.rows_written += 1
        self._file.flush()

    def close(self) -> None:
        if not self._file.closed:
            self._file.close()


def write_best(trials_path: Union[str, Path], best_path: Union[str, Path],
               cfg: ExperimentConfig) -> pd.DataFrame:
    """Write the per-group best rows of a trials file with the same header."""
    best = best_rows(read_results(trials_path))
    best_path = Path(best_path)
    with open(best_path, "w", newline="") as f:
        for line in config_header(cfg):
            f.write(line + "\n")
        writer = csv.DictWriter(f, fieldnames=list(COLUMNS))
        writer.writeheader()
        for record in best.to_dict(orient="records"):
            writer.writerow({k: _format_cell(k, v) for k, v in record.items()})
    logger.info(f"Wrote {len(best)} best rows to {best_path}", extra={"experiment": cfg.experiment})
    return best


def _format_cell(column: str, value: Any) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return ""
    # Nullable integer columns come back from pandas as floats
    if column in INT_COLUMNS:
        return str(int(value))
    if isinstance(value, float):
        return repr(value)
    return str(value)
