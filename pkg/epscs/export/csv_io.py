"""
CSV export of evaluated quantities and import of sampled functions.
"""
import logging
from typing import IO, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from ..exceptions import SampledInputError

logger = logging.getLogger(__name__)

PathOrStream = Union[str, IO[str]]

SAMPLED_COLUMNS = ("x", "re", "im")


def build_frame(columns: Sequence[str], rows: Iterable[Sequence]) -> pd.DataFrame:
    """
    Assemble rows into a frame with the given header.

    Args:
        columns: Column names
        rows: Row tuples, one entry per column

    Returns:
        DataFrame with exactly the given columns (possibly no rows)
    """
    return pd.DataFrame(list(rows), columns=list(columns))


def save_csv(target: PathOrStream, columns: Sequence[str], rows: Iterable[Sequence],
             comments: Optional[List[str]] = None) -> int:
    """
    Write a CSV file: comment rows, one header row, then the data rows.

    Floats are written in shortest round-trip form, so the same rows always
    give the same bytes.

    Args:
        target: Output path or text stream
        columns: Header
        rows: Data rows
        comments: Lines written before the header, each prefixed with "# "

    Returns:
        Number of data rows written
    """
    frame = build_frame(columns, rows)
    preamble = "".join(f"# {line}\n" for line in (comments or []))
    if isinstance(target, str):
        with open(target, "w", encoding="utf-8", newline="") as handle:
            handle.write(preamble)
            frame.to_csv(handle, index=False, lineterminator="\n")
    else:
        target.write(preamble)
        frame.to_csv(target, index=False, lineterminator="\n")
    logger.debug("wrote %d csv rows", len(frame))
    return len(frame)


def read_sampled_csv(path: str) -> Tuple[np.ndarray, np.ndarray]:
    """
    Read a sampled function from a CSV file with columns x, re, im.

    Lines starting with '#' are ignored.

    Args:
        path: Input file

    Returns:
        (grid, complex values)

    Raises:
        SampledInputError: If the file cannot be read or lacks the columns
    """
    try:
        frame = pd.read_csv(path, comment="#", float_precision="round_trip")
    except (OSError, ValueError, pd.errors.ParserError) as e:
        raise SampledInputError(f"cannot read sampled function from {path!r}: {e}") from e

    missing = [c for c in SAMPLED_COLUMNS if c not in frame.columns]
    if missing:
        raise SampledInputError(f"{path!r} lacks column(s) {', '.join(missing)}")
    try:
        grid = frame["x"].to_numpy(dtype=float)
        values = frame["re"].to_numpy(dtype=float) + 1j * frame["im"].to_numpy(dtype=float)
    except (TypeError, ValueError) as e:
        raise SampledInputError(f"{path!r} holds non-numeric samples: {e}") from e
    if len(grid) < 2 or not (np.all(np.isfinite(grid)) and np.all(np.isfinite(values))):
        raise SampledInputError(f"{path!r} needs at least two finite samples")
    if np.any(np.diff(grid) <= 0):
        raise SampledInputError(f"{path!r}: x must be strictly increasing")
    return grid, values
