"""Deterministic JSON and text output.

All artifacts are written with sorted keys, LF line endings, and floats
rounded to 12 significant digits so reruns produce byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path


def round_sig(value: float, digits: int = 12) -> float:
    """Round a float to `digits` significant digits."""
    return float(format(value, f".{digits}g"))


def _rounded(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return round_sig(obj)
    if isinstance(obj, dict):
        return {k: _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    return obj


def dumps_json(obj) -> str:
    return json.dumps(_rounded(obj), sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def dump_json(obj, path: str | Path) -> None:
    write_text(path, dumps_json(obj))


def write_text(path: str | Path, text: str) -> None:
    """Write UTF-8 text with LF endings regardless of platform."""
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def write_lines(path: str | Path, lines) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for line in lines:
            f.write(line)
            f.write("\n")
