import csv
import io
import json
import subprocess
import sys

import pytest

from bessel_convexity import cli
from bessel_convexity.cli import main, parse_range, reproduce_rows
from bessel_convexity.errors import DomainError
from bessel_convexity.radius import radius_convexity

from .oracles import CONSTANTS, THRESHOLDS


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_radius_json():
    code, text = run("radius", "--kind", "g", "--nu", "1", "--alpha", "0", "--format", "json")
    assert code == 0
    rec = json.loads(text)
    assert rec["radius"] == pytest.approx(1.0, abs=1e-6)
    # json floats round-trip to the library value bit for bit
    assert rec["radius"] == radius_convexity("g", 1.0).radius


def test_radius_examples():
    rec = json.loads(run("radius", "--kind", "phi", "--nu=-1.5623", "--format", "json")[1])
    assert rec["radius"] == pytest.approx(1.0, abs=2e-3)
    rec = json.loads(run("radius", "--kind", "g", "--nu", "1", "--alpha", "0.999", "--format", "json")[1])
    assert rec["radius"] < 0.05


def test_radius_text_and_csv():
    code, text = run("radius", "--kind", "h", "--nu", "2")
    assert code == 0 and text.startswith("kind")
    code, text = run("radius", "--kind", "h", "--nu", "2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert float(rows[0]["radius"]) == radius_convexity("h", 2.0).radius
    assert "\r" not in text


def test_radius_domain_error_exit_code():
    assert run("radius", "--kind", "f", "--nu", "0")[0] == 2
    assert run("radius", "--kind", "g", "--nu", "1", "--alpha", "1.5")[0] == 2
    assert run("radius", "--kind", "g", "--nu", "1", "--terms", "5")[0] == 2


def test_tolerance_flag_failure():
    resid = radius_convexity("h", 2.0).residual
    assert run("radius", "--kind", "h", "--nu", "2", "--tol", repr(resid))[0] == 0
    assert run("radius", "--kind", "h", "--nu", "2", "--tol", repr(resid / 2))[0] == (1 if resid > 0 else 0)
    assert run("threshold", "--kind", "h", "--tol", "-1")[0] == 1


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["radius"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["radius", "--kind", "x", "--nu", "1"])
    assert exc.value.code == 2


def test_threshold():
    rec = json.loads(run("threshold", "--kind", "h", "--alpha", "0.75", "--format", "json")[1])
    assert rec["nu_critical"] == pytest.approx(1.25, abs=1e-8)
    rec = json.loads(run("threshold", "--kind", "phi", "--format", "json")[1])
    assert rec["nu_critical"] == pytest.approx(THRESHOLDS[("phi", 0.0)], abs=1e-10)


def test_reproduce_rows_and_exit_code():
    rows = {r.quantity: r for r in reproduce_rows()}
    assert rows["nu0_f"].status == "PASS" and rows["nu0_f"].computed == 1.0
    assert rows["nu34_h"].status == "PASS"
    assert rows["nu0_g"].status == "PASS"
    assert rows["nu_star"].computed == pytest.approx(CONSTANTS["nu_star"], abs=1e-12)
    for r in rows.values():
        assert r.status == ("PASS" if r.abs_diff <= r.tolerance else "FAIL")
    code, text = run("reproduce", "--format", "json")
    data = json.loads(text)
    assert len(data) == len(rows)
    assert code == (1 if any(r.status == "FAIL" for r in rows.values()) else 0)


def test_reproduce_all_pass_gives_zero(monkeypatch):
    rows = reproduce_rows()
    monkeypatch.setattr(cli, "REFERENCE", {r.quantity: (r.computed, 1e-12) for r in rows})
    assert run("reproduce")[0] == 0


def test_conjecture():
    rec = json.loads(run("conjecture", "--nu=-1.6", "--format", "json")[1])
    assert rec["verdict"] == "NOT_CONVEX" and rec["conjecture_predicts"] == "CONVEX"
    rec = json.loads(run("conjecture", "--nu=-1.5", "--format", "json")[1])
    assert rec["verdict"] == "CONVEX"
    rec = json.loads(run("conjecture", "--nu=-1.5623", "--format", "json")[1])
    assert abs(rec["q_at_one"]) < 1e-3
    rec = json.loads(run("conjecture", "--nu=-1.9", "--format", "json")[1])
    assert rec["boundary_min"] is None  # -inf is not representable in JSON
    assert run("conjecture", "--nu=-2.5")[0] == 2


def test_table_grid():
    code, text = run("table", "--kind", "g", "--nu-range", "0:2:0.25", "--alpha-range", "0:0.5:0.25")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 27
    assert all(r["status"] == "CERTIFIED" for r in rows)
    assert list(rows[0]) == cli.TABLE_COLUMNS


def test_table_empty_and_domain_rows():
    code, text = run("table", "--kind", "g", "--nu-range", "2:1:0.5")
    assert code == 0 and text.strip() == ",".join(cli.TABLE_COLUMNS)
    code, text = run("table", "--kind", "f", "--nu-range=-0.5:1:0.5", "--format", "json")
    rows = json.loads(text)
    assert [r["status"] for r in rows] == ["DOMAIN_ERROR", "DOMAIN_ERROR", "CERTIFIED", "CERTIFIED"]
    assert rows[0]["radius"] is None
    assert run("table", "--kind", "g", "--nu-range", "0:1:0")[0] == 2


def test_parse_range():
    assert parse_range("0:1:0.25") == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert parse_range("1,2.5") == [1.0, 2.5]
    assert parse_range("1:0:0.1") == []
    for bad in ("a:b:c", "0:1", "0:1:-1", "x"):
        with pytest.raises(DomainError):
            parse_range(bad)


def test_verify():
    code, text = run("verify", "--format", "json")
    assert code == 0
    assert all(r["status"] == "PASS" for r in json.loads(text))


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "bessel_convexity", "radius", "--kind", "g", "--nu", "1",
                          "--format", "json"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["radius"] == pytest.approx(1.0, abs=1e-6)
