"""
Interferogram CSV files with JSON sidecars.

CSV: header ``chi_deg,counts`` and one row per phase-shifter setting.  Floats
are written with ``repr`` so a write/read cycle reproduces them exactly.
The sidecar (same stem, ``.json``) stores the beam and the ``BeamConfig``.
"""

import json
from pathlib import Path

import numpy as np

from .beamline import BEAMS, BeamConfig, Interferogram

SCHEMA_VERSION = 1
CSV_HEADER = ("chi_deg", "counts")


class FormatError(ValueError):
    """Malformed interferogram file; the message names the offending line."""


def _fmt(value):
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def sidecar_path(path):
    return Path(path).with_suffix(".json")


def write_interferogram(g, path, sidecar=True):
    path = Path(path)
    lines = [",".join(CSV_HEADER)]
    lines += [f"{_fmt(c)},{_fmt(v)}" for c, v in zip(g.chi.tolist(), g.intensity.tolist())]
    path.write_text("\n".join(lines) + "\n")
    if sidecar:
        meta = {
            "schema_version": SCHEMA_VERSION,
            "beam": g.beam,
            "config": None if g.config is None else g.config.to_dict(),
        }
        sidecar_path(path).write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return path


def _parse_number(text, lineno, column):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise FormatError(f"line {lineno}: {column} is not a number: {text!r}") from None


def read_interferogram(path, beam=None):
    """
    Read an interferogram CSV (and its sidecar, when present).

    Without a sidecar the beam defaults to ``beam`` or ``"o"`` and the
    config is left empty.
    """
    path = Path(path)
    text = path.read_text()
    rows = text.splitlines()
    if not rows or tuple(h.strip() for h in rows[0].split(",")) != CSV_HEADER:
        raise FormatError(f"line 1: expected header {','.join(CSV_HEADER)}")
    chi, counts = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row.strip():
            continue
        parts = row.split(",")
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 2 fields, got {len(parts)}")
        chi.append(float(_parse_number(parts[0], lineno, "chi_deg")))
        value = _parse_number(parts[1], lineno, "counts")
        if value < 0:
            raise FormatError(f"line {lineno}: negative counts")
        counts.append(value)
    for lineno, (a, b) in enumerate(zip(chi, chi[1:]), start=3):
        if b <= a:
            raise FormatError(f"line {lineno}: chi_deg must be strictly increasing")

    config = None
    meta_path = sidecar_path(path)
    if meta_path.exists():
        try:
            meta = json.loads(meta_path.read_text())
        except json.JSONDecodeError as exc:
            raise FormatError(f"{meta_path}: line {exc.lineno}: {exc.msg}") from None
        beam = meta.get("beam", beam)
        if meta.get("config") is not None:
            config = BeamConfig.from_dict(meta["config"])
    beam = beam or "o"
    if beam not in BEAMS:
        raise FormatError(f"unknown beam {beam!r}")
    if all(isinstance(c, int) for c in counts):
        values = np.array(counts, dtype=np.int64)
    else:
        values = np.array(counts, dtype=float)
    return Interferogram(np.array(chi, dtype=float), values, beam, config)


def dump_json(obj, path=None):
    """Serialize a report with a schema version; write it when ``path`` is given."""
    text = json.dumps({"schema_version": SCHEMA_VERSION, **obj}, indent=2, sort_keys=True,
                      allow_nan=False, default=_json_default) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def _json_default(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")
