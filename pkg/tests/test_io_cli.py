import json
import os

import pytest

from fuchsct.cli import main
from fuchsct.io import (FIXTURES, ProblemError, fixture_path, load_problem, parse_problem,
                        problem_from_dict, serialize)
from fuchsct.algebra.parse import parse_expr

SNAP = os.path.join(os.path.dirname(__file__), "snapshots")
REGEN = os.environ.get("FUCHSCT_REGEN_SNAPSHOTS") == "1"

COMMANDS = ["check", "diffmatrix", "normalize", "hermite", "decompose", "integrable",
            "telescope"]
CASES = [(c, f, m) for c in COMMANDS for f in FIXTURES
         for m in (("canonical", "polyred") if c in ("decompose", "integrable", "telescope")
                   else (None,))]


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def _id(case):
    c, f, m = case
    return "-".join(x for x in (c, f, m) if x)


@pytest.mark.parametrize("case", CASES, ids=_id)
def test_snapshot(capsys, case):
    cmd, fix, method = case
    argv = [cmd, fix] + (["--method", method] if method else [])
    code, out = run(capsys, *argv)
    path = os.path.join(SNAP, _id(case) + ".txt")
    got = "exit %d\n%s" % (code, out)
    if REGEN:
        with open(path, "w") as fh:
            fh.write(got)
    with open(path) as fh:
        assert got == fh.read()


@pytest.mark.parametrize("name", FIXTURES)
def test_round_trip(name):
    text = open(fixture_path(name)).read()
    pf = parse_problem(text)
    again = parse_problem(serialize(pf))
    assert again == pf
    assert serialize(again) == serialize(pf)


def test_output_strings_reparse(capsys):
    for name in ("hermite_example", "telescoping"):
        _, out = run(capsys, "normalize", name)
        data = json.loads(out)
        for row in data["M"] + data["B"]:
            for s in row:
                assert str(parse_expr(s)) == s


def test_known_outputs(capsys):
    code, out = run(capsys, "telescope", "telescoping", "--json")
    data = json.loads(out)
    assert code == 0 and data["telescoper"] == ["1", "-t", "t^2"] and data["verified"]
    assert "\n" not in out.strip()
    _, out = run(capsys, "hermite", "hermite_example")
    data = json.loads(out)
    assert data["g"] == ["3/x", "-1/x"]
    _, out = run(capsys, "decompose", "integrable")
    data = json.loads(out)
    assert data["zero"] and data["R"] == ["0", "0"] and data["Q"] == ["0", "0"]


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "telescope", "elliptic")[0] == 3
    assert run(capsys, "telescope", "hermite_example")[0] == 2
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "telescope", "elliptic_moved", "--max-order", "1")[0] == 1


def test_offer_payload(capsys):
    _, out = run(capsys, "telescope", "elliptic", "--method", "canonical")
    data = json.loads(out)
    assert data["error"] == "precondition" and data["offer"]["a"] == 2
    assert data["offer"]["f"] == ["-1/x^2"]


def test_seed_independence(capsys):
    for cmd in ("decompose", "telescope"):
        outs = {run(capsys, cmd, "telescoping", "--seed", str(s))[1] for s in (0, 7, 99)}
        assert len(outs) == 1


def test_certificate_flag(capsys):
    code, out = run(capsys, "telescope", "elliptic_moved", "--certificate", "--incremental")
    data = json.loads(out)
    assert code == 0 and data["telescoper"] == ["1", "8*t - 4", "4*t^2 - 4*t"]
    assert len(data["certificate"]) == 1


def _fixture(name):
    return json.load(open(fixture_path(name)))


def test_syntax_error_location():
    text = open(fixture_path("hermite_example")).read().replace("7*x-5", "7*x-*5")
    with pytest.raises(ProblemError) as exc:
        parse_problem(text)
    d = exc.value.diagnostics[0]
    line = text.splitlines()[d["line"] - 1]
    assert d["where"] == "L[1]"
    assert line[d["column"] - 1] == "*" and line[d["column"] - 2] == "-"


def test_json_error_location():
    with pytest.raises(ProblemError) as exc:
        parse_problem('{"L": ["1",\n  "x" "y"]}')
    d = exc.value.diagnostics[0]
    assert d["line"] == 2 and d["column"] == 7


@pytest.mark.parametrize("patch,where", [
    ({"W": []}, "W"),
    ({"Vinf": [["1"]]}, "Vinf"),
    ({"W": [["1"], ["0", "1"]]}, "W"),
    ({"W": [["1"], ["2"]]}, "W"),
    ({"Vinf": [["1"], ["0", "1"]]}, "Vinf"),
])
def test_semantic_errors(patch, where):
    d = _fixture("hermite_example")
    d.update(patch)
    with pytest.raises(ProblemError) as exc:
        problem_from_dict(d).build()
    assert exc.value.diagnostics[0]["where"] == where


def test_power_basis_message():
    d = _fixture("hermite_example")
    d["W"] = [["1"], ["0", "1"]]
    with pytest.raises(ProblemError) as exc:
        problem_from_dict(d).build()
    assert "not squarefree" in exc.value.diagnostics[0]["message"]


def test_bad_t_action():
    d = _fixture("telescoping")
    d["U"] = ["x", "t*x^3"]
    with pytest.raises(ProblemError) as exc:
        problem_from_dict(d).build()
    assert exc.value.diagnostics[0]["where"] == "U"


def test_load_by_name_and_path():
    assert load_problem("telescoping") == load_problem(fixture_path("telescoping"))
