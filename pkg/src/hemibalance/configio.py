"""Reading and writing point-configuration files.

A configuration file is JSON with a "dim" integer, a "points" list of
coordinate rows of length dim+1, and an optional "meta" object.  Floats
are written at 17 significant digits so writing, reading, and writing
again reproduces the file byte for byte.
"""

from __future__ import annotations

import json
import warnings
from typing import Optional

import numpy as np

from .hemisphere import Configuration

NORM_WARN_TOL = 1e-6
_NORM_EXACT_TOL = 1e-12
_ZERO_NORM_TOL = 1e-12


class ConfigFileError(ValueError):
    """Malformed configuration file content."""


def _fmt(x: float) -> str:
    return "%.17g" % x


def dumps_configuration(c: Configuration, meta: Optional[dict] = None) -> str:
    """Serialize a configuration; meta defaults to the label if one is set."""
    if meta is None and c.label is not None:
        meta = {"label": c.label}
    rows = ",\n".join(
        "    [" + ", ".join(_fmt(float(v)) for v in row) + "]" for row in c.points
    )
    parts = ['{\n  "dim": %d,\n  "points": [\n%s\n  ]' % (c.dim, rows)]
    if meta is not None:
        if not isinstance(meta, dict):
            raise ConfigFileError("meta must be a JSON object")
        parts.append(',\n  "meta": %s' % json.dumps(meta, sort_keys=True))
    parts.append("\n}\n")
    return "".join(parts)


def loads_configuration(text: str) -> tuple[Configuration, Optional[dict]]:
    """Parse a configuration file; returns the configuration and its meta.

    Rows whose norm strays from 1 are renormalized, with a warning once
    the deviation exceeds 1e-6; a zero-norm row is malformed.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigFileError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ConfigFileError("top level must be a JSON object")
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ConfigFileError(f"dim must be an integer >= 1, got {dim!r}")
    raw = obj.get("points")
    if not isinstance(raw, list) or not raw:
        raise ConfigFileError("points must be a non-empty list of coordinate rows")
    for i, row in enumerate(raw):
        if (
            not isinstance(row, list)
            or len(row) != dim + 1
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in row)
        ):
            raise ConfigFileError(f"point {i} is not a list of {dim + 1} numbers")
    meta = obj.get("meta")
    if meta is not None and not isinstance(meta, dict):
        raise ConfigFileError("meta must be a JSON object")

    pts = np.asarray(raw, dtype=float)
    if not np.isfinite(pts).all():
        raise ConfigFileError("coordinates must be finite")
    norms = np.linalg.norm(pts, axis=1)
    if np.any(norms <= _ZERO_NORM_TOL):
        bad = int(np.argmax(norms <= _ZERO_NORM_TOL))
        raise ConfigFileError(f"point {bad} has zero norm")
    dev = np.abs(norms - 1.0)
    if np.any(dev > _NORM_EXACT_TOL):
        if np.any(dev > NORM_WARN_TOL):
            worst = int(np.argmax(dev))
            warnings.warn(
                f"renormalizing points; row {worst} has norm {norms[worst]:.6g}",
                stacklevel=2,
            )
        pts = pts / norms[:, None]

    label = meta.get("label") if isinstance(meta, dict) else None
    if not isinstance(label, str):
        label = None
    return Configuration(dim, pts, label=label), meta


def write_configuration(path: str, c: Configuration, meta: Optional[dict] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_configuration(c, meta))


def read_configuration(path: str) -> tuple[Configuration, Optional[dict]]:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_configuration(fh.read())
