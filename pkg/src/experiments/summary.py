"""
Summaries of a trials file.

Per (mode, backend, layers) group the best AR of every instance is reduced to
count, mean, median, quartiles and range, together with the share of trials at
or above the AR threshold and the least-squares slope of best AR against n.
The plot-data file holds one row per (instance, group) best point.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd

from ..logging_config import get_logger
from ..vqe import layer_percentages
from .results import STATUS_OK, best_rows, read_results

logger = get_logger(__name__)

GROUP = ["mode", "backend", "layers"]
PLOT_COLUMNS = ["instance_id", "n", "mode", "backend", "layers", "best_ar", "best_expectation", "optimum"]
NOT_AVAILABLE = "n/a"


@dataclass
class Summary:
    table: pd.DataFrame
    plot_data: pd.DataFrame

    def format_table(self) -> str:
        if self.table.empty:
            return "No successful rows."
        return self.table.to_string(index=False, float_format=lambda v: f"{v:.4f}")


def fit_slope(n: pd.Series, values: pd.Series) -> Optional[float]:
    """Least-squares slope of ``values`` over ``n``; None with fewer than two distinct n."""
    mask = values.notna()
    x = n[mask].astype(float).to_numpy()
    y = values[mask].astype(float).to_numpy()
    if len(np.unique(x)) < 2:
        return None
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def plot_data(df: pd.DataFrame) -> pd.DataFrame:
    best = best_rows(df)
    out = best.rename(columns={"ar": "best_ar", "expectation": "best_expectation"})
    return out[PLOT_COLUMNS].sort_values(GROUP + ["n", "instance_id"], kind="mergesort").reset_index(drop=True)


def summarize_frame(df: pd.DataFrame, threshold: float = 0.99) -> Summary:
    points = plot_data(df)
    ok = df[df["status"] == STATUS_OK]
    records = []
    for key, group in points.groupby(GROUP, sort=True):
        ar = group["best_ar"].astype(float)
        trials = ok[(ok["mode"] == key[0]) & (ok["backend"] == key[1]) & (ok["layers"] == key[2])]
        trial_ar = trials["ar"].dropna().astype(float)
        slope = fit_slope(group["n"], ar)
        records.append({
            "mode": key[0],
            "backend": key[1],
            "layers": key[2],
            "instances": len(group),
            "mean": ar.mean(),
            "median": ar.median(),
            "q1": ar.quantile(0.25),
            "q3": ar.quantile(0.75),
            "min": ar.min(),
            "max": ar.max(),
            "pct_ge_threshold": (layer_percentages({key[2]: trial_ar.tolist()}, threshold)[key[2]]
                                 if len(trial_ar) else np.nan),
            "slope": NOT_AVAILABLE if slope is None else f"{slope:.6f}",
        })
    return Summary(table=pd.DataFrame.from_records(records), plot_data=points)


def summarize(path: Union[str, Path], plot_path: Optional[Union[str, Path]] = None,
              threshold: float = 0.99) -> Summary:
    """
    Summarize a trials CSV and write its plot-data file.

    Args:
        plot_path: default ``<csv stem>.plot.csv`` next to the input

    Raises:
        ParseError: malformed CSV, with the offending line number
    """
    path = Path(path)
    summary = summarize_frame(read_results(path), threshold)
    plot_path = Path(plot_path) if plot_path else path.with_name(f"{path.stem}.plot.csv")
    summary.plot_data.to_csv(plot_path, index=False)
    logger.info(f"Summarized {path} into {len(summary.table)} groups; plot data at {plot_path}")
    return summary
