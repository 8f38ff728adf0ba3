import io
import json
import subprocess
import sys

import pytest

from symhodge.cli import main
from symhodge.invariants import InvariantReport
from symhodge.presets import PRESETS


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--json")
    assert code == 0
    return json.loads(text)


def test_headline_query():
    code, text = run("invariants", "--preset", "supersingular-enriques", "--n", "2", "--q", "2")
    assert code == 0
    assert "= 2" in text
    assert "> 1" in text
    assert run_json("invariants", "--preset", "supersingular-enriques", "--n", "2", "--q", "2")["dimension"] == 2


def test_k3_char2():
    assert run_json("invariants", "--preset", "k3", "--char", "2", "--n", "3", "--q", "2")["dimension"] == 1


def test_explicit_hodge_q0():
    payload = run_json("invariants", "--h", "1,1,1", "--char", "0", "--n", "2", "--q", "0")
    assert payload["dimension"] == 1
    assert payload["hodge"] == [1, 1, 1]


def test_json_schema_keys():
    payload = run_json("invariants", "--preset", "abelian-char0", "--n", "2", "--q", "2", "--basis")
    assert {"characteristic", "n", "q", "hodge", "dimension", "method", "basis"} <= set(payload)


@pytest.mark.parametrize("preset", sorted(PRESETS))
def test_json_round_trip(preset):
    text = run("invariants", "--preset", preset, "--n", "3", "--q", "2", "--basis", "--json")[1]
    report = InvariantReport.from_dict(json.loads(text))
    assert json.dumps(report.to_dict(), sort_keys=True) + "\n" == text


def test_oracle_flag_agrees():
    code, text = run("invariants", "--preset", "supersingular-enriques", "--n", "4", "--q", "2", "--oracle")
    assert code == 0
    assert "brute-force over S_4: 2" in text


def test_oracle_mismatch_exit_code(monkeypatch):
    import symhodge.cli as cli
    from symhodge.invariants import invariant_dimension_bruteforce

    def broken(*args, **kwargs):
        r = invariant_dimension_bruteforce(*args, **kwargs)
        return InvariantReport(r.data, r.n, r.q, r.dimension + 1, r.method)

    monkeypatch.setattr(cli, "invariant_dimension_bruteforce", broken)
    code, _ = run("invariants", "--preset", "k3", "--n", "2", "--q", "2", "--oracle")
    assert code == 1


def test_table_supersingular_row():
    payload = run_json("table", "--preset", "supersingular-enriques", "--n-max", "4", "--q", "2")
    assert payload["rows"] == [{"q": 2, "values": [1, 2, 2, 2]}]


def test_table_enriques_char0_q2():
    payload = run_json("table", "--preset", "enriques-char0", "--n-max", "4", "--q", "2")
    assert payload["rows"][0]["values"] == [0, 0, 0, 0]


@pytest.mark.parametrize("preset", sorted(PRESETS))
def test_table_q0_all_ones(preset):
    payload = run_json("table", "--preset", preset, "--n-max", "4", "--q-max", "3")
    assert payload["rows"][0] == {"q": 0, "values": [1, 1, 1, 1]}
    # q = 3 is out of range at n = 1
    assert payload["rows"][3]["values"][0] is None


def test_table_text_alignment():
    code, text = run("table", "--preset", "supersingular-enriques", "--n-max", "4")
    assert code == 0
    lines = text.splitlines()
    assert lines[2].split() == ["q\\n", "1", "2", "3", "4"]
    assert lines[5].split() == ["2", "1", "2", "2", "2"]
    assert len({len(line) for line in lines[2:]}) == 1


def test_compare_supersingular():
    payload = run_json("compare", "--preset", "supersingular-enriques")
    assert {"n": 2, "q": 2, "char0": 1, "engine": 2} in payload["discrepancies"]


def test_compare_k3_char2():
    code, text = run("compare", "--preset", "k3", "--char", "2")
    assert code == 0 and "no discrepancies" in text


def test_compare_char3():
    code, text = run("compare", "--h", "1,1,1", "--char", "3")
    assert code == 0 and "no discrepancies" in text


def test_presets_listing():
    payload = run_json("presets")
    names = [p["name"] for p in payload]
    assert names == ["supersingular-enriques", "enriques-char0", "k3", "abelian-char0"]
    assert all(p["notes"] for p in payload)


@pytest.mark.parametrize("argv", [
    ["invariants", "--preset", "no-such-surface", "--n", "2", "--q", "2"],
    ["invariants", "--h", "1,1,1", "--char", "4", "--n", "2", "--q", "2"],
    ["invariants", "--h", "1,1,1", "--n", "2", "--q", "5"],
    ["invariants", "--h", "1,1", "--n", "2", "--q", "2"],
    ["invariants", "--preset", "k3", "--h", "1,0,1", "--n", "2", "--q", "2"],
    ["invariants", "--preset", "k3", "--n", "2"],
    ["invariants", "--n", "2", "--q", "2"],
    ["invariants", "--preset", "k3", "--n", "7", "--q", "2", "--oracle"],
    ["compare", "--preset", "abelian-char0"],
    ["table", "--preset", "k3", "--n-max", "0"],
])
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = main(argv, out=io.StringIO())
    except SystemExit as exc:  # argparse rejects some inputs itself
        code = exc.code
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_deterministic_output():
    argv = ["table", "--preset", "abelian-char0", "--n-max", "4", "--json"]
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "symhodge", "invariants", "--preset", "supersingular-enriques",
         "--n", "3", "--q", "2", "--json"],
        capture_output=True, text=True, check=True)
    assert json.loads(result.stdout)["dimension"] == 2
