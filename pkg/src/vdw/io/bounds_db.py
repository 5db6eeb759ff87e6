"""Tab-separated known-bounds database.

One bound per line: ``r <TAB> k <TAB> exact|lower <TAB> value <TAB> source``.
Blank lines and ``#`` comments are ignored. Whitespace-separated lines are
accepted too; the source field then takes the rest of the line.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from ..errors import BoundsDBError, DomainError
from ..bounds.recurrence import KnownBound

DEFAULT_DB = "known_bounds.tsv"
_KINDS = {"exact": "exact", "lower": "strict_lower"}
_KIND_NAMES = {v: k for k, v in _KINDS.items()}


def _int_field(text: str, name: str, lineno: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise BoundsDBError(f"{name} field {text!r} is not an integer", lineno) from None


def parse_bounds_db(text: str) -> list[KnownBound]:
    bounds: list[KnownBound] = []
    seen: dict[tuple[int, int, str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = raw.rstrip("\n").split("\t") if "\t" in raw else line.split(None, 4)
        fields = [f.strip() for f in fields]
        if len(fields) < 4:
            raise BoundsDBError(f"expected at least 4 fields, got {len(fields)}", lineno)
        r = _int_field(fields[0], "r", lineno)
        k = _int_field(fields[1], "k", lineno)
        kind = _KINDS.get(fields[2])
        if kind is None:
            raise BoundsDBError(f"kind field {fields[2]!r} must be 'exact' or 'lower'", lineno)
        value = _int_field(fields[3], "value", lineno)
        source = "\t".join(fields[4:]) if len(fields) > 4 else ""
        key = (r, k, kind)
        if key in seen:
            raise BoundsDBError(f"duplicate entry for r={r}, k={k}, kind={fields[2]} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        try:
            bounds.append(KnownBound(r, k, kind, value, source))
        except DomainError as exc:
            raise BoundsDBError(str(exc), lineno) from None
    return bounds


def load_bounds_db(path: str | Path | None = None) -> list[KnownBound]:
    """Load a bounds file; ``None`` loads the database shipped with the package."""
    if path is None:
        text = resources.files("vdw.data").joinpath(DEFAULT_DB).read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_bounds_db(text)


def dump_bounds_db(bounds) -> str:
    return "".join(f"{b.r}\t{b.k}\t{_KIND_NAMES[b.kind]}\t{b.value}\t{b.source}\n" for b in bounds)
