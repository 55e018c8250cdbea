"""Exact edit distance between run-length encoded strings without expanding them."""
from rled.engine import rle_edit_distance
from rled.estimator import RleEditDistance
from rled.rle import Run, RleParseError, RleString, encode_raw, parse_rle, render

__all__ = [
    "RleEditDistance",
    "RleParseError",
    "RleString",
    "Run",
    "encode_raw",
    "parse_rle",
    "render",
    "rle_edit_distance",
]
__version__ = "0.1.0"
