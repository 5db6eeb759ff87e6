"""File formats: certificates and the known-bounds database."""

from .bounds_db import DEFAULT_DB, dump_bounds_db, load_bounds_db, parse_bounds_db
from .certificate import (
    Certificate,
    certify,
    decode_certificate,
    encode_certificate,
    read_certificate,
    write_certificate,
)

__all__ = [
    "Certificate",
    "DEFAULT_DB",
    "certify",
    "decode_certificate",
    "dump_bounds_db",
    "encode_certificate",
    "load_bounds_db",
    "parse_bounds_db",
    "read_certificate",
    "write_certificate",
]
