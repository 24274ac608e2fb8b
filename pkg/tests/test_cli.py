import json
import os
import shutil
import subprocess
import sys

import jsonschema
import pytest

from ncspec import cli
from ncspec.algebra import matrix_algebra
from ncspec.exactlin import QQ
from ncspec.serialize import (
    ANALYSIS_REPORT_SCHEMA,
    FUZZ_RECORD_SCHEMA,
    SPEC_REPORT_SCHEMA,
    algebra_to_dict,
)

FIXTURES = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")


def fx(name, part="hom.json"):
    return os.path.join(FIXTURES, name, part)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spec_text_and_json(capsys):
    code, out, _ = run(capsys, "spec", fx("ex-diag-t2", "S.json"))
    assert code == 0
    assert out.startswith("2 primes; rad = span{e12}")
    code, out, _ = run(capsys, "spec", "--json", fx("ex-diag-t2", "S.json"))
    jsonschema.validate(json.loads(out), SPEC_REPORT_SCHEMA)


def test_radical_and_ideals(capsys):
    code, out, _ = run(capsys, "radical", fx("ex-diag-t2", "S.json"))
    assert code == 0 and "span{e12}" in out
    code, out, _ = run(capsys, "ideals", "--field", "Fp:2", fx("ex-diag-t2", "S.json"))
    assert code == 0


def test_analyze_exit_codes(capsys):
    code, out, _ = run(capsys, "analyze", fx("ex-nilpotent-m2"))
    assert code == 0 and "t = 2" in out
    code, out, _ = run(capsys, "analyze", fx("ex-diag-t2"))
    assert code == 1 and "witness (P1, Q2)" in out
    code, out, _ = run(capsys, "analyze", fx("ex-diag-m2"))
    assert code == 1 and "r not single-valued at P = 0" in out
    code, out, _ = run(capsys, "analyze", "--json", fx("ex-diag-m2"))
    assert code == 1
    report = json.loads(out)
    jsonschema.validate(report, ANALYSIS_REPORT_SCHEMA)
    assert report["flags"]["single_valued"] is False


def test_inconsistent_analysis_exits_2(capsys, monkeypatch):
    real = cli.analyze_hom

    def broken(f):
        a = real(f)
        a.inconsistencies.append("forced disagreement")
        return a

    from ncspec.harness import FIXTURES as FX
    monkeypatch.setattr(cli, "analyze_hom", broken)
    monkeypatch.setattr(cli, "load_hom", lambda path, field=None: FX["ex-diag-t2"].hom(QQ))
    assert run(capsys, "analyze", "x")[0] == 2
    assert run(capsys, "check-3-15", "x")[0] == 2


@pytest.mark.parametrize("name", ["ex-nilpotent-m2", "ex-diag-t2", "ex-diag-m2"])
def test_check_command_reports_consistency(capsys, name):
    code, out, _ = run(capsys, "check-3-15", fx(name))
    assert code == 0 and out.startswith("consistent")


def test_field_override_reduces_scalars(capsys):
    code, out, _ = run(capsys, "analyze", "--field", "Fp:5", fx("ex-diag-t2"))
    assert code == 1


def test_examples_run_shows_both_sides(capsys):
    code, out, _ = run(capsys, "examples", "run", "all")
    assert code == 0
    assert "3/3 PASS" in out
    assert "r^[-1] V_R(I) = {0} != {} = V_S(<f(I)>)" in out
    assert run(capsys, "examples", "run", "nope")[0] == 3


def test_examples_export_matches_shipped_fixtures(capsys, tmp_path):
    assert run(capsys, "examples", "export", str(tmp_path))[0] == 0
    for name in ("ex-nilpotent-m2", "ex-diag-t2", "ex-diag-m2"):
        for part in ("R.json", "S.json", "hom.json"):
            with open(tmp_path / name / part) as a, open(fx(name, part)) as b:
                assert json.load(a) == json.load(b)


def test_validate_and_canonicalize_round_trip(capsys, tmp_path):
    d = algebra_to_dict(matrix_algebra(QQ, 2))
    d["mul"][0][0] = ["2/2", 0, 0, 0]  # non-canonical but equal scalars
    src = tmp_path / "m2.json"
    src.write_text(json.dumps(d))
    out1 = tmp_path / "c1.json"
    out2 = tmp_path / "c2.json"
    assert run(capsys, "validate", "--canonicalize", str(src), "-o", str(out1))[0] == 0
    assert run(capsys, "validate", "--canonicalize", str(out1), "-o", str(out2))[0] == 0
    assert out1.read_text() == out2.read_text()
    assert json.loads(out1.read_text())["mul"][0][0][0] == "1/1"
    code, out, _ = run(capsys, "validate", str(src))
    assert code == 0 and out.startswith("valid algebra of dim 4")


def test_malformed_inputs_exit_3(capsys, tmp_path):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text('{"field": "Q",\n "dim": 2,, }')
    code, _, err = run(capsys, "spec", str(bad_json))
    assert code == 3 and "line 2" in err

    d = algebra_to_dict(matrix_algebra(QQ, 2))
    d["mul"][1][2] = ["0/1", "0/1", "0/1", "1/1"]
    nonassoc = tmp_path / "nonassoc.json"
    nonassoc.write_text(json.dumps(d))
    code, _, err = run(capsys, "spec", str(nonassoc))
    assert code == 3 and "associativity fails at triple (" in err

    d = algebra_to_dict(matrix_algebra(QQ, 2))
    d["mul"][0][1] = ["x", 0, 0, 0]
    badscalar = tmp_path / "badscalar.json"
    badscalar.write_text(json.dumps(d))
    code, _, err = run(capsys, "spec", str(badscalar))
    assert code == 3 and "mul[0][1][0]" in err

    code, _, err = run(capsys, "spec", str(tmp_path / "missing.json"))
    assert code == 3

    shutil.copytree(os.path.join(FIXTURES, "ex-diag-t2"), tmp_path / "h")
    hom = json.loads((tmp_path / "h" / "hom.json").read_text())
    hom["matrix"] = hom["matrix"][:-1]
    (tmp_path / "h" / "hom.json").write_text(json.dumps(hom))
    code, _, err = run(capsys, "analyze", str(tmp_path / "h" / "hom.json"))
    assert code == 3 and "target dimension" in err


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["analyze"])
    assert exc.value.code == 2


def test_fuzz_lines_match_schema(capsys):
    code, out, _ = run(capsys, "fuzz", "--count", "6", "--seed", "100")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    for line in lines:
        jsonschema.validate(json.loads(line), FUZZ_RECORD_SCHEMA)


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ncspec.cli", "examples", "list"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "ex-diag-t2" in proc.stdout
