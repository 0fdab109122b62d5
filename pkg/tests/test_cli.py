"""CLI parsing, outputs, exit-status contract, and output determinism."""

import json
import os
import subprocess
import sys

from theta_forge.cli import EXIT_FAIL, EXIT_INTERNAL, EXIT_PASS, EXIT_USAGE, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- parsing ----------------------------------------------------------------

def test_count_command_parses(capsys):
    code, out, _ = run_cli(capsys, "count", "--form", "1,1,8", "--n", "18")
    assert code == EXIT_PASS and out.strip() == "20"


def test_check_command_parses(capsys):
    code, out, _ = run_cli(capsys, "check", "S7", "--precision", "1000",
                           "--format", "json")
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["reports"][0]["id"] == "S7"
    assert doc["reports"][0]["status"] == "pass"
    assert doc["reports"][0]["precision"] == 1000


def test_form_with_zero_coefficient_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "count", "--form", "0,1", "--n", "3")
    assert code == EXIT_USAGE
    assert "--form" in err and ">= 1" in err


def test_unknown_verb_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "frobnicate")
    assert code == EXIT_USAGE


def test_unknown_check_id_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "check", "bogus")
    assert code == EXIT_USAGE and "bogus" in err


def test_missing_required_count_inputs(capsys):
    assert run_cli(capsys, "count", "--kind", "N", "--n", "4")[0] == EXIT_USAGE
    assert run_cli(capsys, "count", "--kind", "r3")[0] == EXIT_USAGE
    assert run_cli(capsys, "count", "--kind", "h")[0] == EXIT_USAGE


# --- verb outputs -------------------------------------------------------------

def test_count_kinds(capsys):
    assert run_cli(capsys, "count", "--form", "1,1,1", "--n", "1")[1].strip() == "6"
    assert run_cli(capsys, "count", "--kind", "t", "--form", "1,1,8", "--n", "1")[1].strip() == "16"
    assert run_cli(capsys, "count", "--kind", "tprime", "--form", "1,1,8", "--n", "1")[1].strip() == "2"
    assert run_cli(capsys, "count", "--kind", "r3", "--n", "5")[1].strip() == "24"
    assert run_cli(capsys, "count", "--kind", "C", "--form", "1,1,2")[1].strip() == "12"
    assert run_cli(capsys, "count", "--kind", "h", "--d", "-20")[1].strip() == "2"


def test_coeffs_human_and_csv(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--series", "psi", "--precision", "7")
    assert code == EXIT_PASS
    assert out.splitlines() == ["0 1", "1 1", "2 0", "3 1", "4 0", "5 0", "6 1"]
    code, out, _ = run_cli(capsys, "coeffs", "--series", "phi", "--precision", "3",
                           "--format", "csv")
    assert out == "n,value\n0,1\n1,2\n2,0\n"


def test_coeffs_n_series_requires_form(capsys):
    assert run_cli(capsys, "coeffs", "--series", "n", "--precision", "4")[0] == EXIT_USAGE
    code, out, _ = run_cli(capsys, "coeffs", "--series", "n", "--form", "1,1,1",
                           "--precision", "2", "--format", "json")
    assert json.loads(out)["coeffs"] == [1, 6]


def test_list_contains_all_ids(capsys):
    code, out, _ = run_cli(capsys, "list")
    assert code == EXIT_PASS
    for check_id in ("S1", "S13", "T-1.9", "T-LIO", "T-5.17", "X-FALSE"):
        assert check_id in out


def test_scan_json_document(capsys):
    code, out, _ = run_cli(capsys, "scan", "C6.7", "--n-max", "100", "--format", "json")
    assert code == EXIT_PASS
    rep = json.loads(out)["reports"][0]
    assert rep["kind"] == "conjecture"
    assert rep["counterexamples"] == []
    assert rep["residue_classes"] == [[9, 5], [81, 53], [729, 485]]


# --- exit-status contract -----------------------------------------------------

def test_exit_pass_on_clean_check(capsys):
    assert run_cli(capsys, "check", "S1", "--precision", "100")[0] == EXIT_PASS


def test_exit_fail_on_false_identity(capsys):
    assert run_cli(capsys, "check", "X-FALSE")[0] == EXIT_FAIL


def test_exit_fail_on_scan_with_counterexamples(capsys):
    assert run_cli(capsys, "scan", "C6.5", "--n-max", "5")[0] == EXIT_FAIL


def test_exit_internal_on_oversized_request(capsys):
    code, _, err = run_cli(capsys, "check", "T-4.7", "--n-max", "60000000")
    assert code == EXIT_INTERNAL
    assert "internal error" in err


def test_check_all_small(capsys):
    code, out, _ = run_cli(capsys, "check-all", "--precision", "30", "--n-max", "10",
                           "--param-bound", "5")
    assert code == EXIT_PASS
    assert sum(1 for line in out.splitlines() if " pass " in f" {line} ") >= 55


# --- determinism ---------------------------------------------------------------

def _strip_elapsed(doc):
    for rep in doc["reports"]:
        rep.pop("elapsed_ms")
    return doc


def test_json_deterministic_modulo_elapsed(capsys):
    args = ("check-all", "--precision", "30", "--n-max", "8", "--param-bound", "5",
            "--format", "json")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert _strip_elapsed(json.loads(out1)) == _strip_elapsed(json.loads(out2))


def test_csv_byte_identical(capsys):
    args = ("check-all", "--precision", "30", "--n-max", "8", "--param-bound", "5",
            "--format", "csv")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    assert "elapsed" not in out1.splitlines()[0]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "theta_forge", "count", "--form", "1,1,1", "--n", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "6"


def test_check_all_desk_scale_defaults():
    # the documented desk-scale invocation: >= 55 pass lines, exit 0
    proc = subprocess.run(
        [sys.executable, "-m", "theta_forge", "check-all", "--n-max", "200",
         "--precision", "500", "--param-bound", "7"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    pass_lines = [l for l in proc.stdout.splitlines() if " pass " in f" {l} "]
    assert len(pass_lines) >= 55


def test_invalid_backend_env_is_rejected():
    proc = subprocess.run(
        [sys.executable, "-c", "import theta_forge"],
        capture_output=True, text=True,
        env=dict(os.environ, THETA_FORGE_BACKEND="fortran"),
    )
    assert proc.returncode != 0
    assert "THETA_FORGE_BACKEND" in proc.stderr


def test_thread_cap_env(monkeypatch):
    from theta_forge.registry import _thread_cap

    monkeypatch.setenv("THETA_FORGE_THREADS", "3")
    assert _thread_cap() == 3
    monkeypatch.setenv("THETA_FORGE_THREADS", "junk")
    assert _thread_cap() == 1
    monkeypatch.setenv("THETA_FORGE_THREADS", "-2")
    assert _thread_cap() == 1
    monkeypatch.delenv("THETA_FORGE_THREADS")
    assert _thread_cap() >= 1
