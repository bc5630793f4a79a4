import json
import subprocess
import sys
from fractions import Fraction

import pytest

from hurwitz.cli import main
from hurwitz.rings import GAUSSIAN, RATIONALS, parse_rational


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out else None, err


@pytest.fixture
def jet_file(tmp_path):
    def write(values, ring="rational", name="jet.json"):
        path = tmp_path / name
        path.write_text(json.dumps({"ring": ring, "values": values}), encoding="utf-8")
        return str(path)
    return write


def test_partitions(capsys):
    code, env, _ = run_json(capsys, "partitions", "--n", "4")
    assert code == 0
    assert env["command"] == "partitions" and env["exact"] is True
    assert env["result"]["count"] == 5
    code, env, _ = run_json(capsys, "partitions", "--n", "3", "--parts", "2")
    assert env["result"]["partitions"] == [[1, 1, 0]]


def test_partitions_rejects_zero(capsys):
    code, out, err = run(capsys, "partitions", "--n", "0")
    assert code == 2
    assert out == "" and "n must be >= 1" in err


def test_max_order_cap(capsys, monkeypatch):
    monkeypatch.setenv("HURWITZ_MAX_ORDER", "6")
    code, _, err = run(capsys, "partitions", "--n", "7")
    assert code == 2 and "HURWITZ_MAX_ORDER" in err
    assert run(capsys, "partitions", "--n", "6")[0] == 0


def test_bell_commands(capsys):
    code, env, _ = run_json(capsys, "bell", "--n", "3", "--k", "2", "--b", '["1","2","6"]')
    assert code == 0 and env["result"]["value"] == "6"
    code, env, _ = run_json(capsys, "bell-complete", "--n", "3", "--b", "[1,1,1]", "--a", '[1,2,6]')
    assert env["result"]["value"] == "13"
    code, env, _ = run_json(
        capsys, "bell", "--n", "2", "--k", "2", "--ring", "gaussian", "--b", '[["0","1"],"0"]'
    )
    assert env["result"]["value"] == ["-1", "0"]


@pytest.mark.parametrize("argv", [
    ["bell", "--n", "3", "--k", "4", "--b", "[1,1,1]"],
    ["bell", "--n", "3", "--k", "1", "--b", "[1,1]"],
    ["bell", "--n", "3", "--k", "1", "--b", "[1,1,"],
    ["bell", "--n", "3", "--k", "1", "--b", '["0.5",1,1]'],
])
def test_bell_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_flow(capsys, jet_file):
    code, env, _ = run_json(capsys, "flow", "--jet", jet_file(["1", "1", "2", "6"]), "--order", "4")
    assert code == 0
    assert env["result"]["A"] == ["1", "1", "3", "15"]
    code, env, _ = run_json(
        capsys, "flow", "--jet", jet_file([1, 1, 1, 1, 1]), "--order", "5", "--eval", "0"
    )
    assert env["result"]["trajectory"] == [{"t": "0", "value": "0"}]


def test_flow_with_base_and_trajectory(capsys, jet_file):
    path = jet_file(["0", "1", "0"])
    code, env, _ = run_json(
        capsys, "flow", "--jet", path, "--base", "3/2", "--eval", "1/4,1/2"
    )
    assert code == 0
    assert env["inputs"]["base"] == "3/2"
    assert [p["t"] for p in env["result"]["trajectory"]] == ["1/4", "1/2"]
    # f vanishes at the base, so the trajectory stays put
    assert all(p["value"] == "3/2" for p in env["result"]["trajectory"])
    # f(y) = y at y = 3/2: truncated 3/2 * exp(t)
    path = jet_file(["3/2", "1", "0"], name="lin.json")
    _, env, _ = run_json(capsys, "flow", "--jet", path, "--base", "3/2", "--eval", "1/2")
    t = Fraction(1, 2)
    expected = Fraction(3, 2) * (1 + t + t**2 / 2 + t**3 / 6)
    assert parse_rational(env["result"]["trajectory"][0]["value"]) == expected


def test_flow_gaussian(capsys, jet_file):
    path = jet_file([["0", "1"], "1"], ring="gaussian")
    code, env, _ = run_json(capsys, "flow", "--jet", path, "--base", '["0","1"]')
    assert env["result"]["A"] == [["0", "1"], ["0", "1"]]


def test_flow_errors(capsys, jet_file, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert run(capsys, "flow", "--jet", str(bad), "--order", "2")[0] == 2
    assert run(capsys, "flow", "--jet", jet_file(["1", "1"]), "--order", "3")[0] == 2
    assert run(capsys, "flow", "--jet", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "flow", "--jet", jet_file(["1", "x"]))[0] == 2
    assert run(capsys, "flow", "--jet", jet_file(["1"]), "--eval", "0.1")[0] == 2


def test_flow_csv_is_marked_inexact(capsys, jet_file):
    code, out, _ = run(
        capsys, "flow", "--jet", jet_file(["1", "1", "2"]), "--eval", "0,1/2", "--format", "csv"
    )
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("# inexact")
    assert lines[1] == "t,value"
    assert lines[2] == "0.0,0.0"


def test_oracle(capsys):
    code, env, _ = run_json(capsys, "oracle", "--family", "geom", "--order", "5", "--compare-recursion")
    assert code == 0
    assert env["result"]["closed_form"] == ["1", "1", "3", "15", "105"]
    assert env["result"]["recursion"] == env["result"]["closed_form"]
    assert env["result"]["match"] is True
    code, env, _ = run_json(capsys, "oracle", "--family", "exp:2", "--order", "3")
    assert env["result"]["closed_form"] == ["1", "2", "8"]
    assert "match" not in env["result"]
    assert run(capsys, "oracle", "--family", "binom:1")[0] == 2


def test_bound_gaussian_units(capsys, jet_file):
    path = jet_file([["1", "0"], ["0", "1"], ["-1", "0"], ["0", "-1"]], ring="gaussian")
    code, env, _ = run_json(capsys, "bound", "--jet", path, "--majorant", "exp:1", "--order", "4")
    assert code == 0
    result = env["result"]
    assert result["overall"] is True
    assert [r["actual_norm"] for r in result["per_n"]] == ["1", "1", "2", "6"]
    assert all(r["actual_norm"] == r["bound"] for r in result["per_n"])


def test_bound_hypothesis_violation(capsys, jet_file):
    code, env, _ = run_json(capsys, "bound", "--jet", jet_file(["1", "3", "1"]), "--majorant", "exp:1")
    assert code == 3
    assert env["result"]["error"] == "hypothesis_violation"
    assert env["result"]["index"] == 1


def test_bound_eval_t(capsys, jet_file):
    code, env, _ = run_json(
        capsys, "bound", "--jet", jet_file(["1", "1", "2", "6"]), "--majorant", "fact",
        "--eval-t", "1/4",
    )
    assert code == 0
    ev = env["result"]["eval"]
    assert ev["bound"] == "597/2048"
    assert ev["deviation_norm"] == ev["bound"]  # geometric jet attains the bound
    assert ev["holds"] is True
    code, _, err = run(
        capsys, "bound", "--jet", jet_file(["1", "1"]), "--majorant", "fact", "--eval-t", "1/2"
    )
    assert code == 2 and "validity interval" in err


def test_bound_explicit(capsys, jet_file, tmp_path):
    maj = tmp_path / "maj.json"
    maj.write_text(json.dumps(["2", "1", "1"]), encoding="utf-8")
    code, env, _ = run_json(
        capsys, "bound", "--jet", jet_file(["2", "-1", "1/2"]), "--majorant", f"explicit:{maj}"
    )
    assert code == 0 and env["result"]["t_domain"] is None
    assert [r["bound"] for r in env["result"]["per_n"]] == ["2", "2", "6"]
    assert run(capsys, "bound", "--jet", jet_file(["1"]), "--majorant", "explicit:")[0] == 2
    assert run(capsys, "bound", "--jet", jet_file(["1"]), "--majorant", "binom:1")[0] == 2


def _strings(obj):
    if isinstance(obj, str):
        yield obj
    elif isinstance(obj, list):
        for v in obj:
            yield from _strings(v)
    elif isinstance(obj, dict):
        for v in obj.values():
            yield from _strings(v)


def test_exact_envelopes_round_trip(capsys, jet_file):
    path = jet_file([["1/2", "-1/3"], ["2", "0"], ["0", "5/7"]], ring="gaussian")
    _, env, _ = run_json(capsys, "flow", "--jet", path, "--eval", "1/3")
    assert env["exact"] is True
    for value in env["result"]["A"]:
        z = GAUSSIAN.parse(value)
        assert GAUSSIAN.format(z) == value
    _, env, _ = run_json(capsys, "oracle", "--family", "binom:1/2", "--order", "6")
    for s in env["result"]["closed_form"]:
        assert RATIONALS.format(parse_rational(s)) == s
    _, env, _ = run_json(capsys, "bound", "--jet", jet_file(["1", "1/2"]), "--majorant", "fact")
    numeric = [s for s in _strings(env["result"]["per_n"]) if s]
    assert all(RATIONALS.format(parse_rational(s)) == s for s in numeric)


def test_module_entry_point_is_deterministic(tmp_path):
    path = tmp_path / "jet.json"
    path.write_text(json.dumps({"ring": "rational", "values": ["1", "1", "2", "6", "24"]}))
    argv = [sys.executable, "-m", "hurwitz", "flow", "--jet", str(path), "--eval", "1/4,1/2"]
    first = subprocess.run(argv, capture_output=True, text=True, check=True)
    second = subprocess.run(argv, capture_output=True, text=True, check=True)
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["result"]["A"] == ["1", "1", "3", "15", "105"]


def test_usage_error_from_argparse(capsys):
    with pytest.raises(SystemExit) as info:
        main(["flow"])
    assert info.value.code == 2
