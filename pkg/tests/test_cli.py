import json
import shutil
import subprocess
import sys

import pytest

from wfbound import selftest
from wfbound.cli import main

SECOND_EXAMPLE = {
    "group": {"kind": "Sp", "n": 148},
    "factors": [
        {"kind": "SpFinite", "m_plus": 8, "m_minus": 3},
        {"kind": "SpFinite", "m_plus": 6, "m_minus": 5},
    ],
    "unitary": [],
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def datum_file(tmp_path):
    def write(obj, name="datum.json"):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(path)

    return write


def test_partition_commands(capsys):
    assert run(capsys, "transpose", "[5,3,1]") == (0, "[3,2,2,1,1]\n", "")
    assert run(capsys, "sum", "[3,2,1]", "[2,1]")[1] == "[5,3,1]\n"
    assert run(capsys, "concat", "[3,1]", "[2,2]")[1] == "[3,2,2,1]\n"
    assert run(capsys, "string", "6")[1] == "[6,4,2]\n"
    assert run(capsys, "string", "-1")[1] == "[]\n"


def test_orbit_commands(capsys):
    assert run(capsys, "collapse", "--kind", "C", "[3,1]")[1] == "[2,2]\n"
    assert run(capsys, "dual", "--from", "B", "--rank", "3", "[3,1,1,1,1]") == (0, "[4,2]\n", "")
    code, out, _ = run(capsys, "orbits", "--kind", "B", "--rank", "2")
    assert out.split() == ["[5]", "[3,1,1]", "[2,2,1]", "[1,1,1,1,1]"]
    code, out, _ = run(capsys, "orbits", "--kind", "C", "--rank", "2", "--json")
    assert json.loads(out) == ["[4]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]


def test_param_and_wavefront(capsys, datum_file):
    path = datum_file(SECOND_EXAMPLE)
    code, out, _ = run(capsys, "param", "--datum", path)
    assert code == 0
    assert out.startswith("[29,27,25,")
    code, out, _ = run(capsys, "param", "--datum", path, "--json")
    data = json.loads(out)
    assert data["kind"] == "B148"
    assert data["factor_ranks"] == [81, 67]
    code, out, _ = run(capsys, "wavefront", "--datum", path, "--json", "--oracle")
    data = json.loads(out)
    assert data["combined"].startswith("[22,22,20,20,")
    assert data["oracle_agrees"] == "yes"
    code, out, _ = run(capsys, "wavefront", "--datum", path)
    assert "oracle: not-run" in out


def test_check_reports_json(capsys, datum_file):
    code, out, _ = run(capsys, "check", "--datum", datum_file(SECOND_EXAMPLE))
    assert code == 0
    report = json.loads(out)
    assert report["dominance_holds"] is True
    assert report["datum"] == SECOND_EXAMPLE


def test_check_reference_divergence(capsys, datum_file):
    first = {
        "group": {"kind": "Sp", "n": 143},
        "factors": [
            {"kind": "SpFinite", "m_plus": 8, "m_minus": 5},
            {"kind": "SpFinite", "m_plus": 6, "m_minus": 2},
        ],
    }
    printed = "[26,24,22,20,18,18,16,16,14,14,12,12,10,10,8,8,6,6,6,6,4,4,4,4,2,2,2,2]"
    code, out, _ = run(capsys, "check", "--datum", datum_file(first), "--reference", printed)
    assert code == 0
    notes = json.loads(out)["notes"]
    assert any(n.startswith("reference wavefront") for n in notes)


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--group", "sp", "--max-rank", "4", "--json")
    assert code == 0
    summary = json.loads(out)
    assert summary["dominance_failures"] == []
    assert summary["group"] == "Sp"
    code, out, _ = run(capsys, "enumerate", "--group", "soodd", "--max-rank", "3")
    assert code == 0
    assert any(line.startswith("DIVERGENCE ") for line in out.splitlines())


def test_output_file_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run(capsys, "enumerate", "--group", "soeven", "--max-rank", "4", "--json", "-o", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["count"] > 0


def test_oracle_command(capsys):
    assert run(capsys, "oracle", "--piece", "unitary:1:2", "--type", "C")[1] == "[4,2]\n"
    assert run(capsys, "oracle", "--piece", "b_pair:1", "--piece", "b_pair:0", "--type", "B")[1] == "[3,1,1]\n"
    code, out, _ = run(capsys, "oracle", "--sweep")
    assert code == 0
    assert ", 0 mismatches" in out


def test_g2(capsys):
    code, out, _ = run(capsys, "g2", "--verify")
    assert code == 0
    assert [line[:8] for line in out.splitlines() if line.startswith("(")] == [
        f"({c}) pass" for c in "abcde"
    ]
    code, out, _ = run(capsys, "g2", "--dump")
    assert len(json.loads(out)["tempered"]) == 34


def test_selftest_exit_codes(capsys, monkeypatch):
    ok = selftest.CriterionResult(1, "stub", True, "fine", 0.0, None)
    bad = selftest.CriterionResult(2, "stub", False, "broken", 0.0, None)
    monkeypatch.setattr(selftest, "run_all", lambda seed=0: [ok])
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and out.startswith("[PASS] criterion 1")
    monkeypatch.setattr(selftest, "run_all", lambda seed=0: [ok, bad])
    code, out, _ = run(capsys, "selftest")
    assert code == 1 and "[FAIL] criterion 2" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["transpose", "5,3,1"],
        ["transpose", "[1,3]"],
        ["sum"],
        ["collapse", "--kind", "C", "[3]"],
        ["collapse", "--kind", "A", "[3]"],
        ["collapse", "--kind", "Q", "[3]"],
        ["dual", "--from", "C", "[3,1]"],
        ["orbits", "--kind", "C", "--rank", "30"],
        ["enumerate", "--group", "sp", "--max-rank", "99"],
        ["enumerate", "--group", "sp", "--max-rank", "-1"],
        ["enumerate", "--group", "e8", "--max-rank", "2"],
        ["oracle", "--piece", "unitary:x:2"],
        ["oracle"],
        ["frobnicate"],
        [],
    ],
)
def test_invalid_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        json.dumps({"group": {"kind": "Sp", "n": 2}}),
        json.dumps({**SECOND_EXAMPLE, "group": {"kind": "Sp", "n": 149}}),
        json.dumps({**SECOND_EXAMPLE, "unitary": [{"k": 1, "m1": 0, "m2": 0}]}),
    ],
)
def test_bad_datum_exits_2(capsys, datum_file, text):
    for cmd in ("param", "wavefront", "check"):
        code, out, err = run(capsys, cmd, "--datum", datum_file(text))
        assert code == 2
        assert len(err.strip().splitlines()) == 1


def test_missing_datum_file(capsys, tmp_path):
    code, _, err = run(capsys, "param", "--datum", str(tmp_path / "nope.json"))
    assert code == 2
    assert "cannot read" in err


def test_console_script_is_installed():
    exe = shutil.which("wfbound")
    cmd = [exe] if exe else [sys.executable, "-m", "wfbound.cli"]
    proc = subprocess.run(cmd + ["string", "5"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "[5,3,1]\n"
