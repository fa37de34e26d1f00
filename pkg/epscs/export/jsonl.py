"""
JSON-lines export of verification reports.
"""
import json
import math
import sys
from typing import IO, Any, Dict, Iterable, Optional, Union


def _clean(value: Any) -> Any:
    # JSON has no inf/nan; a non-finite defect is written as null
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    if hasattr(value, "item"):
        return _clean(value.item())
    return value


class JsonLinesWriter:
    """
    Writer for one JSON record per line.

    Opens the target lazily, like a file handle; a stream passed in is
    written to but never closed.
    """

    def __init__(self, target: Union[str, IO[str], None] = None):
        """
        Initialize the writer.

        Args:
            target: Output path, text stream, or None for stdout
        """
        self.target = target
        self.stream: Optional[IO[str]] = None
        self._owns_stream = False
        self.count = 0

    def open(self) -> "JsonLinesWriter":
        if self.stream is not None:
            return self
        if isinstance(self.target, str):
            self.stream = open(self.target, "w", encoding="utf-8", newline="")
            self._owns_stream = True
        else:
            self.stream = self.target if self.target is not None else sys.stdout
        return self

    def write(self, record: Dict[str, Any]) -> None:
        """Write one record as a single line."""
        self.open()
        self.stream.write(json.dumps(_clean(record), allow_nan=False) + "\n")
        self.count += 1

    def write_all(self, records: Iterable[Dict[str, Any]]) -> int:
        for record in records:
            self.write(record)
        return self.count

    def close(self) -> None:
        if self.stream is not None:
            if self._owns_stream:
                self.stream.close()
            else:
                self.stream.flush()
        self.stream = None
        self._owns_stream = False

    @property
    def is_open(self) -> bool:
        return self.stream is not None

    def __enter__(self):
        return self.open()

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()
        return False
