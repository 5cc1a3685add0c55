import json
import os
from typing import Any, Optional

import numpy as np
import pandas as pd

from package import key
from package.core.types import PointConfiguration

FLOAT_FORMAT = "%.17g"


def _makedirs_for(output_path: str):
    directory = os.path.dirname(output_path)
    if directory:
        os.makedirs(directory, exist_ok=True)


def write_df(df: pd.DataFrame, output_path: str):
    _makedirs_for(output_path)

    df.to_csv(output_path, index=False, float_format=FLOAT_FORMAT)


def read_df(path: str) -> pd.DataFrame:
    return pd.read_csv(path)


def _to_json(value: Any):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, complex):
        return [value.real, value.imag]
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def write_json(data: dict[str, Any], output_path: str):
    _makedirs_for(output_path)

    with open(output_path, "w") as f:
        json.dump(data, f, indent=2, default=_to_json)
        f.write("\n")


def read_json(path: str) -> dict[str, Any]:
    with open(path) as f:
        return json.load(f)


def configuration_df(
    lines: list[PointConfiguration],
    weights: Optional[list[Optional[np.ndarray]]] = None,
) -> pd.DataFrame:
    """One row per point with columns level, index, position, weight."""
    frames = []
    for level, line in enumerate(lines):
        weight = np.nan if weights is None or weights[level] is None else weights[level]
        frames.append(
            pd.DataFrame(
                {
                    key.LEVEL_KEY: level,
                    key.INDEX_KEY: np.arange(len(line)),
                    key.POSITION_KEY: line.points,
                    key.WEIGHT_KEY: weight,
                }
            )
        )
    if not frames:
        return pd.DataFrame(columns=key.CONFIGURATION_COLUMNS)
    return pd.concat(frames, ignore_index=True)[key.CONFIGURATION_COLUMNS]
