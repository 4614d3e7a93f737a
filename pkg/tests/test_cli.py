import json

import pytest

from ncdegen import cli, report
from ncdegen.report import Check, run_suite


def test_verify_passes(capsys):
    assert cli.main(["verify", "--suite", "incidence"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1].startswith("overall: PASS")


def test_quiet(capsys):
    assert cli.main(["verify", "--suite", "reps", "-q"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 1


def test_failing_check_exits_one(monkeypatch, capsys):
    monkeypatch.setitem(report.SUITES, "euler", lambda: [Check("x", "broken", 1, 2, report.DERIVED)])
    assert cli.main(["verify", "--suite", "euler"]) == 1
    assert "expected 1, computed 2" in capsys.readouterr().out


def test_internal_error_exits_two(monkeypatch, capsys):
    def boom():
        raise RuntimeError("nope")
    monkeypatch.setitem(report.SUITES, "euler", boom)
    assert cli.main(["verify", "--suite", "euler"]) == 2
    assert "RuntimeError" in capsys.readouterr().err


def test_usage_error():
    with pytest.raises(SystemExit) as e:
        cli.main(["verify", "--suite", "nonsense"])
    assert e.value.code == 2
    with pytest.raises(KeyError):
        run_suite("nonsense")


def test_json_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["verify", "--suite", "complex", "--json", str(a), "-q"]) == 0
    assert cli.main(["verify", "--suite", "complex", "--json", str(b), "-q"]) == 0
    assert a.read_bytes() == b.read_bytes()
    d = json.loads(a.read_text())
    assert d["suite"] == "complex" and d["passed"] and d["n_failed"] == 0
    for c in d["checks"]:
        assert set(c) == {"id", "description", "expected", "computed", "provenance", "passed"}
        assert c["provenance"] in (report.CITED, report.DERIVED)


def test_json_stdout(capsys):
    assert cli.main(["verify", "--suite", "euler", "--json", "-"]) == 0
    assert json.loads(capsys.readouterr().out)["suite"] == "euler"


def test_all_is_union():
    full = run_suite("all")
    ids = [c.id for c in full.checks]
    assert len(ids) == len(set(ids))
    parts = set()
    for name in report.SUITES:
        parts |= {c.id for c in run_suite(name).checks}
    assert set(ids) == parts
    assert full.passed


def test_dump_matrices(tmp_path, capsys):
    assert cli.main(["verify", "--suite", "euler", "-q", "--dump-matrices", str(tmp_path)]) == 0
    assert (tmp_path / "d1_0_2.csv").exists() and len(list(tmp_path.glob("restriction_*.csv"))) == 21


@pytest.mark.parametrize("what", cli.EXPORTS)
def test_export(what, tmp_path):
    p = tmp_path / "x.json"
    assert cli.main(["export", what, "-o", str(p)]) == 0
    assert json.loads(p.read_text())


def test_module_entry():
    import subprocess, sys
    r = subprocess.run([sys.executable, "-m", "ncdegen", "verify", "--suite", "incidence", "-q"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "PASS" in r.stdout
