import csv
import io

import mpmath
import pytest

from legasym import verify
from legasym.errors import DomainError

M = mpmath.mpf


def test_targets_load():
    t = verify.load_targets()
    assert set(t) == {"R-complex", "R-cauchy", "R-ferrers", "S-ferrers"}
    assert t["R-complex"]["max"]["value"] == "1.18724e-16"
    assert t["S-ferrers"]["argmax"]["x"] == "0.331819"


def test_curve_table():
    c = verify.curves()
    assert set(c) == {"AB", "BC", "CD", "circle", "ferrers-R", "ferrers-S"}
    z, side = c["AB"].point(0)
    assert z == M("1.5") and side is None
    z, side = c["BC"].point(0)
    assert z == 0 and side is not None


def test_R_at_recorded_maximum():
    curve = verify.curves()["AB"]
    r = verify.residual(curve, M("0.90632"))
    assert abs(r / M("1.18724e-16") - 1) < M("0.01")


def test_Rbar_at_one():
    r = abs(verify.Rbar_value(M(1)) - 1)
    assert abs(r / M("4.626048e-11") - 1) < M("0.01")


def test_S_at_recorded_maximum():
    r = abs(verify.S_value(M("0.331819")) - 1)
    assert abs(r / M("9.884448e-12") - 1) < M("0.01")


def test_residual_small_elsewhere():
    assert abs(verify.Rbar_value(M("0.3")) - 1) < M("4.626048e-11")
    assert abs(verify.S_value(M("0.9")) - 1) < M("9.884448e-12")


def test_sweep_csv_schema():
    curve = verify.curves()["ferrers-S"]
    ts, vals = verify.sweep_values(curve, 4)
    text = verify.sweep_csv(curve, ts, vals, {"N": 10})
    lines = text.splitlines()
    assert lines[0].startswith("# legasym-sweep schema=1 curve=ferrers-S quantity=S digits=")
    rows = list(csv.reader(io.StringIO("\n".join(lines[1:]))))
    assert rows[0] == ["param", "re_point", "im_point", "residual"]
    assert len(rows) == 5
    assert M(rows[-1][0]) == M("0.999")


def test_identity_report_passes():
    rep = verify.verify_identities()
    assert rep.passed, rep.failures
    assert any(k.startswith("P-turn") for k in rep.measured)


def test_unknown_quantity():
    bad = verify.Curve("x", "nope", 0, 1, "")
    with pytest.raises(DomainError):
        verify.residual(bad, M("0.5"))
