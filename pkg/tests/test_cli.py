import json

import pytest

from vdw.cli import main
from vdw.io import read_certificate


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_blocks(capsys):
    code, out, _ = run(capsys, "blocks", "--r", "5", "--k", "11")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "S_1(5,11) = (1,2,3,4,5,1,2,3,4,5,1)"
    assert lines[4] == "S_5(5,11) = (5,1,2,3,4,5,1,2,3,4,5)"
    assert lines[5] == "p = 11; excluded block indices: {1}"


def test_construct_then_verify(capsys, tmp_path):
    cert = tmp_path / "c.cert"
    code, _, err = run(capsys, "construct", "--r", "3", "--k", "3", "--out", str(cert))
    assert code == 0 and "verified=brute_verified" in err
    assert len(read_certificate(cert).coloring) == 18
    assert run(capsys, "verify", str(cert))[0] == 0
    code, out, _ = run(capsys, "verify", str(cert), "--oracle")
    assert code == 0 and "brute" in out


def test_construct_from_base(capsys, tmp_path):
    base = tmp_path / "base.cert"
    assert run(capsys, "search", "--r", "2", "--k", "3", "--limit", "20", "--out", str(base), "--quiet")[0] == 0
    out = tmp_path / "o.cert"
    assert run(capsys, "construct", "--r", "3", "--k", "3", "--base", str(base), "--out", str(out))[0] == 0
    assert len(read_certificate(out).coloring) == 24
    # large output stays unverified/structural instead of being scanned
    out2 = tmp_path / "o2.cert"
    assert run(capsys, "construct", "--r", "3", "--k", "3", "--base", str(base), "--out", str(out2), "--n-max", "10")[0] == 0
    assert read_certificate(out2).verification == "structural"


def test_verify_invalid(capsys, tmp_path):
    from vdw.core import Coloring
    from vdw.io import Certificate, write_certificate

    path = tmp_path / "bad.cert"
    write_certificate(Certificate(Coloring((1, 2, 1, 2, 1), 2), 3, "ingested"), path)
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1 and "start=1 diff=2 color=1" in out
    code, _, _ = run(capsys, "verify", str(path), "--n-max", "3")
    assert code == 6


def test_search_summary(capsys):
    code, out, err = run(capsys, "search", "--r", "2", "--k", "3", "--limit", "20")
    assert code == 0
    assert "best_length=8 exhausted=true" in err and "w(2,3)=9" in err
    assert out.startswith("vdw-cert 1 r=2 k=3 n=8 origin=searched")


def test_bounds_derive(capsys):
    code, out, _ = run(capsys, "bounds", "derive", "--r", "6", "--k", "7")
    assert code == 0
    assert "final: 20,590,633" in out
    steps = [line for line in out.splitlines() if line.startswith("step ")]
    # (5,7) is itself derived, so the full audit starts from (4,7)
    assert steps[-1].endswith("(5,7) length 2,941,519 x 7 -> (6,7) length 20,590,633")
    assert "basis: (4,7)" in out
    code, out, _ = run(capsys, "bounds", "derive", "--r", "4", "--k", "5", "--strengthened", "corrected")
    assert code == 0 and "strengthened (corrected)" in out


def test_bounds_table_formats(capsys):
    code, out, _ = run(capsys, "bounds", "table")
    assert code == 0 and out.splitlines()[-1].startswith("flagged: ")
    code, out, _ = run(capsys, "bounds", "table", "--format", "json-lines")
    rows = [json.loads(x) for x in out.splitlines()]
    assert len(rows) == 88
    code, out, _ = run(capsys, "bounds", "table", "--format", "csv")
    assert out.splitlines()[0].startswith("r,k,expected")


def test_bounds_compare(capsys, tmp_path):
    consts = tmp_path / "c.json"
    consts.write_text(json.dumps({"kozik_shabanov": {"c": 1}}))
    code, out, _ = run(capsys, "bounds", "compare", "--r", "3", "--k", "4", "--constants", str(consts))
    assert code == 0
    assert "kozik_shabanov" in out and "27" in out
    consts.write_text("{not json")
    assert run(capsys, "bounds", "compare", "--r", "3", "--k", "4", "--constants", str(consts))[0] == 5


def test_exit_codes(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["search", "--r", "2"])
    assert exc.value.code == 2
    assert run(capsys, "verify", str(tmp_path / "missing.cert"))[0] == 3
    assert run(capsys, "construct", "--r", "4", "--k", "3")[0] == 4
    bad = tmp_path / "bad.cert"
    bad.write_text("hello\nworld\n")
    assert run(capsys, "verify", str(bad))[0] == 5
    db = tmp_path / "db.tsv"
    db.write_text("2 3 exact nine x\n")
    code, _, err = run(capsys, "bounds", "table", "--db", str(db))
    assert code == 5 and "line 1" in err
