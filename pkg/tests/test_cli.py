import io
import json

import pytest

from liefaces.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_ct_exceptional():
    assert call("ct", "--group", "E6", "--field", "F2") == (0, "486\n", "")


@pytest.mark.parametrize(
    "args, value",
    [
        (("ct", "--group", "G2", "--method", "rational"), "28"),
        (("ct", "--group", "G2", "--method", "rankdim"), "24"),
        (("ct", "--group", "SU", "--n", "2", "--field", "Q"), "5"),
    ],
)
def test_ct_methods(args, value):
    code, out, _ = call(*args)
    assert code == 0 and out.strip() == value


def test_ct_file(tmp_path):
    path = tmp_path / "g2.alg"
    path.write_text("name G2m2\nfield F2\ngen degree=3 height=3\ngen degree=5 height=1\n")
    assert call("ct", "--file", str(path))[:2] == (0, "44\n")
    code, _, err = call("ct", "--file", str(path), "--method", "rational")
    assert code == 2 and "exterior" in err


def test_ct_file_rational(tmp_path):
    path = tmp_path / "s3.alg"
    path.write_text("name S3\ngen degree=3 height=1\n")
    assert call("ct", "--file", str(path), "--method", "rational")[:2] == (0, "5\n")
    assert call("ct", "--file", str(path), "--method", "rankdim")[:2] == (0, "5\n")


def test_missing_file():
    code, out, err = call("ct", "--file", "missing.alg")
    assert code == 2 and out == "" and "missing.alg" in err


def test_bad_file_reports_position(tmp_path):
    path = tmp_path / "bad.alg"
    path.write_text("gen degree=3 height=1\n")
    code, _, err = call("ct", "--file", str(path))
    assert code == 2 and "line 1" in err


def test_faces_single_index():
    assert call("faces", "--group", "G2", "--field", "F2", "--i", "14")[:2] == (0, "36808\n")
    assert call("faces", "--group", "G2", "--field", "F2", "--i", "15")[0] == 2


def test_faces_formats():
    code, out, _ = call("faces", "--group", "G2", "--field", "F2", "--format", "json")
    assert code == 0 and json.loads(out)["bounds"][-1] == 36808
    code, out, _ = call("faces", "--group", "F4", "--field", "all", "--format", "csv")
    assert out.splitlines()[0] == "i,F2,F3,F5,Q"
    assert out.splitlines()[53].endswith(",33358701528614974,6767339614495258,6767339614495258")


def test_total():
    assert call("total", "--group", "G2", "--field", "F2")[:2] == (0, "11746824\n")


def test_poincare():
    code, out, _ = call("poincare", "--group", "G2", "--field", "Q")
    assert code == 0 and out.splitlines()[-1] == "1 + t^3 + t^11 + t^14"


def test_catalog_list():
    code, out, _ = call("catalog", "list")
    assert code == 0 and "G2 [F2,F3,F5,Q]" in out.splitlines()


def test_classical():
    code, out, _ = call("classical", "--family", "SO", "--n", "5")
    assert code == 0 and "closed_form  102" in out and "derived      62" in out
    code, out, _ = call("classical", "--family", "SU", "--n", "3", "--facets")
    assert "derived        69" in out and "agree          false" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        ((), 1),
        (("bogus",), 1),
        (("ct", "--group", "G2", "--file", "x"), 1),
        (("faces", "--group", "G2"), 1),
        (("ct", "--group", "E9", "--field", "Q"), 2),
        (("ct", "--group", "SU", "--field", "Q"), 2),
        (("classical", "--family", "Torus", "--n", "3", "--facets"), 2),
    ],
)
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code
    assert err


def test_report_check_exits_zero():
    code, out, _ = call("report", "--check")
    assert code == 0
    assert "0 mismatches" in out.splitlines()[-1]


def test_report_summary():
    code, out, _ = call("report")
    assert code == 0 and "E8" in out


def test_output_is_deterministic():
    a = call("faces", "--group", "E6", "--field", "all")
    b = call("faces", "--group", "E6", "--field", "all")
    assert a == b
