import json
import subprocess
import sys

from zetaline.cli import main


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_stieltjes_json(capsys):
    code, out = run_cli(["stieltjes", "--kmax", "3", "--digits", "30"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    assert payload["method"] == "contour"
    assert payload["values"][0]["k"] == 0
    assert payload["values"][0]["gamma"].startswith("+5.772156649")


def test_coeffs_rows_include_negative_index(capsys):
    code, out = run_cli(["coeffs", "--nmax", "1", "--digits", "61"], capsys)
    assert code == 0
    payload = json.loads(out)
    ns = [row["n"] for row in payload["values"]]
    assert ns == [-1, 0, 1]
    assert payload["values"][0]["value"].startswith("-1.0000")


def test_coeffs_csv_format(capsys):
    code, out = run_cli(["coeffs", "--nmax", "2", "--digits", "61", "--format", "csv"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,value"
    assert len(lines) == 5
    assert "\r" not in out


def test_eval_both_methods(capsys):
    code, out = run_cli(
        ["eval", "--sigma", "2", "--t", "0", "--method", "both", "--nmax", "40"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["zeta_em"][0].startswith("+1.6449340668")
    assert payload["zeta_series"][0].startswith("+1.6449340668")
    assert float(payload["discrepancy"].split("e")[0]) is not None


def test_reproducibility_byte_identical(capsys):
    _, out1 = run_cli(["coeffs", "--nmax", "4", "--digits", "61"], capsys)
    _, out2 = run_cli(["coeffs", "--nmax", "4", "--digits", "61"], capsys)
    assert out1 == out2


def test_usage_error_exit_code(capsys):
    assert main(["definitely-not-a-command"]) == 2
    assert main(["quad", "cross"]) == 2  # missing --a/--b


def test_precision_error_exit_code(capsys):
    # reserve violation: nmax 100 at 61 digits
    assert main(["coeffs", "--nmax", "100", "--digits", "61"]) == 3


def test_quad_bsy_small(capsys):
    code, out = run_cli(["quad", "bsy", "--tcut", "300"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["name"] == "bsy"
    assert abs(float(payload["value"])) < 1e-2
    assert "trunc_bound" in payload


def test_roots_subcommand(capsys):
    code, out = run_cli(["roots", "--nmax", "12", "--radii", "0.5,0.8"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["N"] == 12
    assert payload["winding_counts"] == [[0.5, 0], [0.8, 0]]


def test_ergodic_subcommand_small(capsys):
    code, out = run_cli(["ergodic", "--g", "em:1", "--iters", "2000", "--seeds", "2"], capsys)
    assert code == 0
    assert '"prediction_re"' in out
    assert '"median_final_re"' in out
    assert '"skip_rate"' in out


def test_console_entrypoint_help():
    proc = subprocess.run(
        [sys.executable, "-m", "zetaline.cli", "--help"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "verify-all" in proc.stdout
