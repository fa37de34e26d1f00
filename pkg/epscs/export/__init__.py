"""
CSV and JSON-lines output.
"""
from .csv_io import build_frame, read_sampled_csv, save_csv
from .jsonl import JsonLinesWriter

__all__ = ["build_frame", "read_sampled_csv", "save_csv", "JsonLinesWriter"]
