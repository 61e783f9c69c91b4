import io
import json
from pathlib import Path

import jsonschema
import pytest

from flagmotive.cli import main

GOLDEN = Path(__file__).parent / "golden"

TERMS = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["exp", "coef"],
        "properties": {
            "exp": {"type": "array", "items": {"type": "integer"}},
            "coef": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
        },
    },
}
MOTIVE = {
    "type": "object",
    "required": ["base", "summands"],
    "properties": {
        "base": {"type": "string"},
        "summands": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["twist", "mult"],
                "properties": {
                    "twist": {"type": "integer"},
                    "mult": {"type": "integer", "minimum": 1},
                },
            },
        },
    },
}
REPORT = {
    "type": "object",
    "required": ["group", "theory", "rank", "basis", "coefficient_ring", "series"],
    "properties": {
        "group": {"type": "string"},
        "theory": {"enum": ["KH", "Ki", "K0-completed", "Chow"]},
        "rank": {"type": "integer", "minimum": 0},
        "basis": {"type": "array", "items": {"type": "string"}},
        "coefficient_ring": {"type": "string"},
        "series": {"type": "object"},
    },
}
WEYL = {
    "type": "object",
    "required": ["group", "order", "length_census", "poincare", "longest"],
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "poincare": {"type": "array", "items": {"type": "integer"}},
        "longest": {"type": "string"},
    },
}
COMPLETE = {
    "type": "object",
    "required": ["element", "completed", "rendered"],
    "properties": {
        "element": {"type": "object", "required": ["terms"], "properties": {"terms": TERMS}},
        "completed": {
            "type": "object",
            "required": ["precision", "terms"],
            "properties": {"precision": {"type": "integer"}, "terms": TERMS},
        },
    },
}
VERIFY = {
    "type": "object",
    "required": ["group", "checks", "ok"],
    "properties": {"ok": {"type": "boolean"}, "checks": {"type": "array"}},
}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def filtration(tmp_path):
    def write(levels, proper=True, label="test"):
        p = tmp_path / "filtration.json"
        p.write_text(json.dumps({"proper": proper, "levels": levels, "label": label}))
        return str(p)

    return write


def test_motive_a1_text():
    code, out, _ = run("motive", "A1")
    assert code == 0
    assert "1_BT<0> + 1_BT<1>" in out


def test_complete_text():
    code, out, _ = run("complete", "--element", "t^-1", "--precision", "3", "T1")
    assert code == 0
    assert out.strip() == "t^-1  ->  1 + x + x^2 + x^3 + O(deg 4)"


def test_weyl_t1_text():
    code, out, _ = run("weyl", "T1")
    assert code == 0
    assert "order        1" in out and "poincare     1" in out


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["motive", "A1"], "motive_A1.json"),
        (["weyl", "T1"], "weyl_T1.json"),
        (["complete", "--element", "t^-1", "--precision", "3", "T1"], "complete_T1_tinv_p3.json"),
        (["chow", "A2", "--precision", "2"], "chow_A2_p2.json"),
    ],
)
def test_golden(argv, golden):
    assert run_json(*argv) == json.loads((GOLDEN / golden).read_text())


@pytest.mark.parametrize(
    "argv, schema",
    [
        (["weyl", "G2"], WEYL),
        (["motive", "B2"], MOTIVE),
        (["motive", "A2", "--waiver"], MOTIVE),
        (["ktheory", "A2", "--i", "3"], REPORT),
        (["ktheory", "A1", "--kh"], REPORT),
        (["ktheory", "B2", "--rational", "--i", "1"], REPORT),
        (["ktheory", "A2", "--completed", "--precision", "4"], REPORT),
        (["chow", "B3", "--precision", "6"], REPORT),
        (["complete", "--element", "t1*t2^-2 - 1", "--precision", "4", "A2"], COMPLETE),
        (["verify", "A3"], VERIFY),
    ],
)
def test_json_schemas(argv, schema):
    jsonschema.validate(run_json(*argv), schema)


def test_assemble_json_schema(filtration):
    payload = run_json("assemble", filtration([[0], [1, 1], [2]]))
    jsonschema.validate(payload, MOTIVE)
    assert payload["strict"] is True


def test_ktheory_values():
    assert run_json("ktheory", "A2", "--i", "3")["rank"] == 6
    rep = run_json("ktheory", "A1", "--completed", "--precision", "3")
    assert rep["holds"] and rep["left"]["rank"] == rep["right"]["rank"] == 2
    assert rep["higher_tor"] == {"1": 0, "2": 0, "3": 0}


def test_strictness_gate(filtration):
    path = filtration([[2], [1]])
    code, out, err = run("assemble", path)
    assert code == 1 and err.startswith("SplittingNotCertified")
    payload = run_json("assemble", path, "--waiver")
    assert payload["summands"] == [{"twist": 1, "mult": 1}, {"twist": 2, "mult": 1}]
    assert payload["strict"] is False and payload["notes"]


def test_not_proper(filtration):
    code, _, err = run("assemble", filtration([[0]], proper=False))
    assert code == 1 and err.startswith("NotProper")


@pytest.mark.parametrize(
    "argv, name",
    [
        (["weyl", "[[2,-2],[-2,2]]"], "NotFiniteType"),
        (["weyl", "[[2,1],[1,2]]"], "InvalidMatrix"),
        (["motive", "Q7"], "SpecSyntaxError"),
        (["ktheory", "A1", "--i", "-1"], "NegativeDegree"),
        (["complete", "--element", "t3", "--precision", "2", "T2"], "SpecSyntaxError"),
        (["assemble", "/nonexistent/file.json"], "SpecSyntaxError"),
        (["chow", "A1", "--precision", "-1"], "ValueError"),
    ],
)
def test_validation_errors(argv, name):
    code, out, err = run(*argv)
    assert code == 1
    assert out == ""
    assert err.startswith(name + ":")


def test_budget_env(monkeypatch):
    monkeypatch.setenv("FLAGMOTIVE_BUDGET", "100")
    code, _, err = run("weyl", "B4")
    assert code == 1 and err.startswith("BudgetExceeded")


def test_verify_skips_oracle_above_max_rank():
    payload = run_json("verify", "A3", "--max-rank", "2")
    status = {c["name"]: c["status"] for c in payload["checks"]}
    assert status["oracle matrix set"] == "skip"
    assert payload["ok"]


def test_verify_mismatch_exit_code(monkeypatch):
    import flagmotive.cli as cli
    from flagmotive.checks import Check

    monkeypatch.setattr(cli, "run_checks", lambda *a, **k: [Check("forced", "fail")])
    code, _, err = run("verify", "A1")
    assert code == 2 and err.startswith("VerificationMismatch")


@pytest.mark.parametrize(
    "argv",
    [
        ["weyl", "B3", "--json"],
        ["motive", "F4"],
        ["chow", "G2", "--precision", "8", "--json"],
        ["complete", "--element", "(t1 - t2)^3*t3^-2", "--precision", "5", "A1xA1xT1"],
    ],
)
def test_deterministic_output(argv):
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run(
        [sys.executable, "-m", "flagmotive", "motive", "A1", "--json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(res.stdout) == json.loads((GOLDEN / "motive_A1.json").read_text())
