"""Canonical text encoding of colorings.

A certificate is::

    vdw-cert 1 r=<r> k=<k> n=<n> origin=<origin> verified=<status>
    <body, 80 characters per line>
    hash=<sha256 hex of the header and body lines, each newline-terminated>

For ``r <= 35`` each position is one symbol from ``1-9a-z``. Larger ``r``
writes each color as its digit count followed by its decimal digits
(color 123 becomes ``3123``); a color of 10 or more digits is out of range.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from typing import Literal

from ..core import Coloring
from ..errors import FormatError, HashMismatchError, InvalidColoringError, MalformedHeaderError, SymbolRangeError
from ..verifier import DEFAULT_N_MAX, verify

FORMAT_VERSION = 1
LINE_WIDTH = 80
COMPACT_SYMBOLS = "123456789abcdefghijklmnopqrstuvwxyz"
MAX_COMPACT_R = len(COMPACT_SYMBOLS)

Origin = Literal["searched", "constructed", "ingested"]
Verification = Literal["brute_verified", "structural", "unverified"]
ORIGINS = ("searched", "constructed", "ingested")
VERIFICATIONS = ("brute_verified", "structural", "unverified")

_HEADER = re.compile(
    r"vdw-cert (?P<version>\d+) r=(?P<r>\d+) k=(?P<k>\d+) n=(?P<n>\d+) "
    r"origin=(?P<origin>\w+) verified=(?P<verified>\w+)"
)
_SYMBOL_VALUE = {s: i for i, s in enumerate(COMPACT_SYMBOLS, start=1)}


@dataclass(frozen=True)
class Certificate:
    coloring: Coloring
    k: int
    origin: str = "constructed"
    verification: str = "unverified"
    format_version: int = FORMAT_VERSION

    def __post_init__(self) -> None:
        if self.origin not in ORIGINS:
            raise ValueError(f"origin must be one of {ORIGINS}, got {self.origin!r}")
        if self.verification not in VERIFICATIONS:
            raise ValueError(f"verification must be one of {VERIFICATIONS}, got {self.verification!r}")

    @property
    def r(self) -> int:
        return self.coloring.r

    @property
    def n(self) -> int:
        return len(self.coloring)

    @property
    def content_hash(self) -> str:
        return _digest(_header_line(self), _body_lines(self.coloring))

    def encode(self) -> str:
        return encode_certificate(self)


def _header_line(cert: Certificate) -> str:
    return (
        f"vdw-cert {cert.format_version} r={cert.r} k={cert.k} n={cert.n} "
        f"origin={cert.origin} verified={cert.verification}"
    )


def _encode_body(coloring: Coloring) -> str:
    if coloring.r <= MAX_COMPACT_R:
        return "".join(COMPACT_SYMBOLS[c - 1] for c in coloring.colors)
    parts = []
    for c in coloring.colors:
        digits = str(c)
        if len(digits) > 9:
            raise SymbolRangeError(f"color {c} has more than 9 digits")
        parts.append(f"{len(digits)}{digits}")
    return "".join(parts)


def _body_lines(coloring: Coloring) -> list[str]:
    body = _encode_body(coloring)
    return [body[i : i + LINE_WIDTH] for i in range(0, len(body), LINE_WIDTH)]


def _digest(header: str, body_lines: list[str]) -> str:
    h = hashlib.sha256()
    for line in [header, *body_lines]:
        h.update(line.encode("ascii"))
        h.update(b"\n")
    return h.hexdigest()


def encode_certificate(cert: Certificate) -> str:
    header = _header_line(cert)
    body = _body_lines(cert.coloring)
    return "\n".join([header, *body, f"hash={_digest(header, body)}"]) + "\n"


def _decode_body(body: str, r: int) -> tuple[int, ...]:
    if r <= MAX_COMPACT_R:
        out = []
        for pos, s in enumerate(body, start=1):
            c = _SYMBOL_VALUE.get(s)
            if c is None or c > r:
                raise SymbolRangeError(f"symbol {s!r} at position {pos} is not a color in 1..{r}")
            out.append(c)
        return tuple(out)
    out = []
    i = 0
    while i < len(body):
        width = body[i]
        if not width.isdigit() or width == "0":
            raise SymbolRangeError(f"bad length prefix {width!r} at offset {i}")
        w = int(width)
        digits = body[i + 1 : i + 1 + w]
        if len(digits) != w or not digits.isdigit():
            raise SymbolRangeError(f"truncated color at offset {i}")
        c = int(digits)
        if not 1 <= c <= r:
            raise SymbolRangeError(f"color {c} at position {len(out) + 1} is not in 1..{r}")
        out.append(c)
        i += 1 + w
    return tuple(out)


def decode_certificate(text: str) -> Certificate:
    """Parse and integrity-check a certificate produced by :func:`encode_certificate`."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2:
        raise MalformedHeaderError("certificate needs a header and a hash line")
    header, body, hash_line = lines[0], lines[1:-1], lines[-1]
    m = _HEADER.fullmatch(header)
    if m is None:
        raise MalformedHeaderError(f"unrecognised header {header!r}")
    version = int(m["version"])
    if version != FORMAT_VERSION:
        raise MalformedHeaderError(f"unsupported format version {version}")
    r, k, n = int(m["r"]), int(m["k"]), int(m["n"])
    if r < 1 or k < 2:
        raise MalformedHeaderError(f"header has r={r}, k={k}")
    if m["origin"] not in ORIGINS or m["verified"] not in VERIFICATIONS:
        raise MalformedHeaderError(f"unknown origin or verification in {header!r}")
    if not hash_line.startswith("hash="):
        raise MalformedHeaderError("last line must be hash=<hex>")
    expected = hash_line[len("hash=") :]
    actual = _digest(header, body)
    if expected != actual:
        raise HashMismatchError(f"hash mismatch: file says {expected}, content hashes to {actual}")
    colors = _decode_body("".join(body), r)
    if len(colors) != n:
        raise MalformedHeaderError(f"header says n={n} but body holds {len(colors)} colors")
    cert = Certificate(Coloring(colors, r), k, m["origin"], m["verified"], version)
    if encode_certificate(cert) != "\n".join(lines) + "\n":
        raise FormatError("certificate is not in canonical form")
    return cert


def certify(
    coloring: Coloring,
    k: int,
    origin: str = "constructed",
    *,
    n_max: int = DEFAULT_N_MAX,
    structural: bool = False,
) -> Certificate:
    """Wrap a coloring, verifying it exhaustively when ``len <= n_max``.

    Longer colorings get ``structural`` if they came out of a blow-up of a
    verified base (``structural=True``) and ``unverified`` otherwise.
    Raises ``InvalidColoringError`` if the exhaustive check finds a k-TMAP.
    """
    if len(coloring) <= n_max:
        report = verify(coloring, k, n_max=n_max)
        if not report.valid:
            raise InvalidColoringError(f"coloring contains a {k}-term monochromatic AP: {report.witness}", report.witness)
        status = "brute_verified"
    else:
        status = "structural" if structural else "unverified"
    return Certificate(coloring, k, origin, status)


def read_certificate(path) -> Certificate:
    with open(path, encoding="ascii") as fh:
        return decode_certificate(fh.read())


def write_certificate(cert: Certificate, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(encode_certificate(cert))
