"""CLI behaviors, exit codes, and output formats."""

import io
import json
import subprocess
import sys
from contextlib import redirect_stdout
from importlib import resources

import jsonschema
import pytest

from starextremal import cli, graphs
from starextremal.canon import canonical_form


def run_cli(argv, stdin_text=None, monkeypatch=None):
    """Invoke main() in-process, capturing stdout and the exit code."""
    buf = io.StringIO()
    if stdin_text is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin_text)
    try:
        with redirect_stdout(buf):
            try:
                code = cli.main(argv)
            except SystemExit as exc:  # argparse argument errors
                code = exc.code
    finally:
        if stdin_text is not None:
            sys.stdin = old
    return code, buf.getvalue()


def test_construct():
    code, out = run_cli(["construct", "--family", "G", "-n", "10", "-l", "0", "-i", "4"])
    assert code == 0
    assert graphs.graph6_decode(out.strip()) == graphs.build_g(10, 0, 4)
    code, out = run_cli(["construct", "--family", "H", "-n", "6", "-k", "1", "-i", "3"])
    assert code == 0
    assert graphs.graph6_decode(out.strip()) == graphs.build_h(6, 1, 3)


def test_construct_invalid_index_exit_2():
    code, _ = run_cli(["construct", "--family", "G", "-n", "10", "-l", "0", "-i", "7"])
    assert code == 2


def test_stars():
    g6 = graphs.graph6_encode(graphs.build_g(6, 0, 1))
    code, out = run_cli(["stars", "-t", "2"], stdin_text=g6 + "\n")
    assert code == 0 and out.strip() == "34"
    code, out = run_cli(["stars", "-t", "1", "--graph", g6])
    assert code == 0 and out.strip() == "11"
    code, out = run_cli(["stars", "-t", "2",
                         "--graph", graphs.graph6_encode(graphs.empty_graph(3))])
    assert code == 0 and out.strip() == "0"


def test_check():
    g6 = graphs.graph6_encode(graphs.build_g(6, 0, 2))
    code, out = run_cli(["check", "--property", "hamiltonian", "--graph", g6])
    assert code == 0
    assert out.startswith("false")
    assert "i*=2" in out
    code, out = run_cli(["check", "--property", "hamiltonian", "--graph",
                         graphs.graph6_encode(graphs.complete_graph(5))])
    assert out.startswith("true")
    g6 = graphs.graph6_encode(graphs.build_h(6, 2, 1))
    code, out = run_cli(["check", "--property", "k-connected", "--k", "2",
                         "--graph", g6, "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["has_property"] is False
    assert payload[0]["witness"]["i_star"] == 1


def test_bound():
    code, out = run_cli(["bound", "--main", "-n", "10", "-l", "0",
                         "-d", "4", "-t", "6", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["bound"] == 336
    assert payload["argmax"] == "BOTH"
    assert payload["extremal_labeled_count"] == 2
    code, out = run_cli(["bound", "--kconn", "-n", "6", "-k", "2",
                         "-d", "1", "-t", "1"])
    assert code == 0 and "bound=11" in out and "argmax=ID" in out


def test_bound_empty_domain_exit_3():
    code, _ = run_cli(["bound", "--main", "-n", "8", "-l", "0", "-d", "4", "-t", "5"])
    assert code == 3


def test_closure():
    c5 = graphs.graph6_encode(graphs.cycle_graph(5))
    code, out = run_cli(["closure", "--threshold", "4"], stdin_text=c5)
    assert code == 0
    assert graphs.graph6_decode(out.strip()) == graphs.complete_graph(5)
    pet = graphs.graph6_encode(graphs.petersen_graph())
    code, out = run_cli(["closure", "--threshold", "10", "--graph", pet])
    assert graphs.graph6_decode(out.strip()) == graphs.petersen_graph()


def test_canon():
    a = graphs.graph6_encode(graphs.cycle_graph(5))
    b = graphs.graph6_encode(graphs.cycle_graph(5).relabel([2, 0, 3, 1, 4]))
    code, out = run_cli(["canon"], stdin_text=a + "\n" + b + "\n")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == lines[1] == canonical_form(graphs.cycle_graph(5))


def test_verify_small_csv():
    code, out = run_cli(["verify", "-n", "5", "--n-min", "4"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,ell_or_k,d,t,property,bound,observed_max,verdict,extremal_count"
    assert all("MATCHES_BOUND" in line for line in lines[1:])


def test_verify_json_schema():
    code, out = run_cli(["verify", "-n", "5", "--n-min", "4", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    schema = json.loads(
        resources.files("starextremal").joinpath(
            "schema/verify_report.schema.json").read_text())
    jsonschema.validate(payload, schema)
    assert payload["verified"] is True


def test_verify_single_property():
    code, out = run_cli(["verify", "-n", "6", "--n-min", "6",
                         "--property", "hamiltonian"])
    assert code == 0
    assert {line.split(",")[4] for line in out.strip().splitlines()[1:]} == \
        {"hamiltonian"}


def test_verify_budget_exit_4():
    code, out = run_cli(["verify", "-n", "7", "--budget", "0.000001"])
    assert code == 4
    assert "INCOMPLETE" in out


def test_scan_threshold():
    code, out = run_cli(["scan", "--threshold", "-n", "4:40", "-l", "0"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,ell,t,ordering,strict,predicted,consistent"
    assert all(line.endswith("True") for line in lines[1:])


def test_scan_conjecture():
    code, out = run_cli(["scan", "--conjecture", "-n", "4:30", "--ell=-1:2",
                         "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"]
    assert "persistent_from" in payload
    assert payload["persistent_from"]["0"] == 6


def test_scan_empty_range_exit_2():
    code, _ = run_cli(["scan", "--conjecture", "-n", "12:4", "-l", "0"])
    assert code == 2


def test_graph6_parse_error_exit_2():
    code, _ = run_cli(["stars", "-t", "1", "--graph", "!!"])
    assert code == 2


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "starextremal.cli",
         "bound", "--main", "-n", "8", "-l", "0", "-d", "0", "-t", "4"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert "bound=125" in proc.stdout
    assert "argmax=ID" in proc.stdout


def test_determinism_across_runs():
    a = run_cli(["verify", "-n", "5", "--n-min", "5"])
    b = run_cli(["verify", "-n", "5", "--n-min", "5"])
    assert a == b
    a = run_cli(["scan", "--conjecture", "-n", "4:20", "-l", "0:1"])
    b = run_cli(["scan", "--conjecture", "-n", "4:20", "-l", "0:1"])
    assert a == b
