import pytest
from hypothesis import given, strategies as st

from vdw.bounds import KnownBound
from vdw.bounds.table import literature_cells
from vdw.core import Coloring
from vdw.errors import (
    BoundsDBError,
    FormatError,
    HashMismatchError,
    InvalidColoringError,
    MalformedHeaderError,
    SymbolRangeError,
)
from vdw.io import (
    Certificate,
    certify,
    decode_certificate,
    dump_bounds_db,
    encode_certificate,
    load_bounds_db,
    parse_bounds_db,
    read_certificate,
    write_certificate,
)
from vdw.searcher import search_max_valid


def test_body_symbols():
    text = encode_certificate(Certificate(Coloring((2, 1, 2), 2), 3))
    lines = text.splitlines()
    assert lines[0] == "vdw-cert 1 r=2 k=3 n=3 origin=constructed verified=unverified"
    assert lines[1] == "212"
    assert lines[2].startswith("hash=") and len(lines[2]) == 5 + 64


def test_searched_certificate_round_trip(tmp_path):
    cert = search_max_valid(3, 3, 40).certificate
    text = encode_certificate(cert)
    again = decode_certificate(text)
    assert again == cert
    assert encode_certificate(again) == text
    path = tmp_path / "c.cert"
    write_certificate(cert, path)
    assert path.read_bytes() == text.encode("ascii")
    assert read_certificate(path) == cert


@given(
    st.integers(1, 60).flatmap(lambda r: st.tuples(st.just(r), st.lists(st.integers(1, r), max_size=300))),
    st.integers(2, 9),
)
def test_round_trip_any_coloring(rc, k):
    r, colors = rc
    cert = Certificate(Coloring(colors, r), k, "ingested")
    text = encode_certificate(cert)
    assert decode_certificate(text) == cert
    assert all(len(line) <= 80 for line in text.splitlines()[1:-1])


def test_wide_encoding():
    cert = Certificate(Coloring((1, 36, 123), 200), 3)
    assert encode_certificate(cert).splitlines()[1] == "112363123"
    assert decode_certificate(encode_certificate(cert)) == cert


def _rehash(text):
    lines = text.splitlines()
    import hashlib

    h = hashlib.sha256("".join(line + "\n" for line in lines[:-1]).encode()).hexdigest()
    return "\n".join(lines[:-1] + [f"hash={h}"]) + "\n"


def test_tampered_hash_line():
    text = encode_certificate(Certificate(Coloring((2, 1, 2), 2), 3))
    bad = text.replace("hash=", "hash=0", 1)
    with pytest.raises(HashMismatchError):
        decode_certificate(bad)


def test_tampered_body():
    text = encode_certificate(Certificate(Coloring((2, 1, 2), 2), 3))
    with pytest.raises(HashMismatchError):
        decode_certificate(text.replace("\n212\n", "\n211\n"))


def test_symbol_out_of_range():
    text = _rehash("vdw-cert 1 r=2 k=3 n=3 origin=constructed verified=unverified\n232\nhash=x\n")
    with pytest.raises(SymbolRangeError):
        decode_certificate(text)


def test_malformed_headers():
    with pytest.raises(MalformedHeaderError):
        decode_certificate("")
    with pytest.raises(MalformedHeaderError):
        decode_certificate(_rehash("vdw-cert 2 r=2 k=3 n=3 origin=constructed verified=unverified\n212\nhash=x\n"))
    with pytest.raises(MalformedHeaderError):
        decode_certificate(_rehash("vdw-cert 1 r=2 k=3 n=4 origin=constructed verified=unverified\n212\nhash=x\n"))
    with pytest.raises(MalformedHeaderError):
        decode_certificate(_rehash("vdw-cert 1 r=2 k=3 n=3 origin=found verified=unverified\n212\nhash=x\n"))


def test_non_canonical_line_breaks_rejected():
    cert = Certificate(Coloring((1, 2) * 50, 2), 3)
    lines = encode_certificate(cert).splitlines()
    body = "".join(lines[1:-1])
    text = _rehash("\n".join([lines[0], body[:50], body[50:], "hash=x"]) + "\n")
    with pytest.raises(FormatError):
        decode_certificate(text)


def test_certify_statuses():
    good = Coloring((1, 1, 2, 2, 1, 1, 2, 2), 2)
    assert certify(good, 3).verification == "brute_verified"
    assert certify(good, 3, n_max=4).verification == "unverified"
    assert certify(good, 3, n_max=4, structural=True).verification == "structural"
    with pytest.raises(InvalidColoringError):
        certify(Coloring((1, 2, 1, 2, 1), 2), 3)


def test_db_line_examples():
    assert parse_bounds_db("2 3 exact 9 vdW") == [KnownBound(2, 3, "exact", 9, "vdW")]
    assert parse_bounds_db("4 4 lower 1048 literature") == [KnownBound(4, 4, "strict_lower", 1048, "literature")]


def test_db_errors_carry_line_numbers():
    with pytest.raises(BoundsDBError, match="line 1: value"):
        parse_bounds_db("2 3 exact nine x")
    with pytest.raises(BoundsDBError, match="line 3"):
        parse_bounds_db("# c\n2 3 exact 9\n2 3 exact 9\n")
    with pytest.raises(BoundsDBError):
        parse_bounds_db("2 3 maybe 9")
    with pytest.raises(BoundsDBError):
        parse_bounds_db("2 3 exact")
    with pytest.raises(BoundsDBError):
        parse_bounds_db("2 5 lower 1")


def test_default_db_is_the_literature_cells():
    db = load_bounds_db()
    assert sorted(db, key=lambda b: (b.k, b.r)) == sorted(literature_cells(), key=lambda b: (b.k, b.r))


def test_db_dump_round_trip(tmp_path):
    db = load_bounds_db()
    path = tmp_path / "db.tsv"
    path.write_text(dump_bounds_db(db))
    assert load_bounds_db(path) == db
