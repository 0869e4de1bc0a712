import json
import math

import pytest

from entrofun.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_m0_value(capsys):
    code, out, err = run_cli(capsys, "eval", "--kind", "i1", "--m", "0",
                             "--alpha", "50", "--mu", "2", "--lambda", "1",
                             "--kappa", "2", "--method", "asym")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["value"]["log_abs"] == pytest.approx(0.0, abs=1e-13)
    assert doc["status"] == "ok"


def test_eval_closed_gamma(capsys):
    code, out, _ = run_cli(capsys, "eval", "--kind", "i5", "--m", "1",
                           "--alpha", "100", "--sigma", "1", "--lambda", "1",
                           "--kappa", "2", "--method", "closed")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"]["log_abs"] == pytest.approx(math.lgamma(102.0),
                                                    rel=1e-15)


def test_eval_no_expansion_status(capsys):
    code, out, _ = run_cli(capsys, "eval", "--kind", "i4", "--m", "2",
                           "--alpha", "80", "--method", "asym")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "no_expansion"
    assert doc["value"]["sign"] == 1


def test_eval_json_round_trip(capsys):
    _, out, _ = run_cli(capsys, "eval", "--kind", "i3", "--m", "1",
                        "--alpha", "60", "--a", "-0.5", "--b", "0.5",
                        "--c", "1", "--d", "3", "--kappa", "2")
    doc = json.loads(out)
    assert json.loads(json.dumps(doc)) == doc


def test_eval_inconsistent_parameters(capsys):
    code, out, err = run_cli(capsys, "eval", "--kind", "i1", "--m", "1",
                             "--alpha", "50", "--mu", "2", "--method", "asym")
    assert code != 0
    assert out == ""
    assert "error" in json.loads(err)


def test_eval_unknown_kind(capsys):
    code, _, err = run_cli(capsys, "eval", "--kind", "i9", "--m", "0",
                           "--alpha", "5")
    assert code == 2
    assert "error" in json.loads(err)


def test_determinism(capsys):
    args = ("sweep", "--kind", "i1", "--m", "1", "--alpha", "1", "--mu", "2",
            "--lambda", "1", "--kappa", "2", "--alpha-start", "50",
            "--alpha-stop", "400", "--count", "3", "--methods", "oracle,asym")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_jobs_do_not_change_output(capsys):
    base = ("sweep", "--kind", "i5", "--m", "1", "--alpha", "1", "--sigma",
            "1", "--lambda", "2", "--kappa", "2", "--alpha-start", "100",
            "--alpha-stop", "400", "--count", "3", "--methods",
            "asym,closed,oracle")
    _, seq, _ = run_cli(capsys, *base, "--jobs", "1")
    _, par, _ = run_cli(capsys, *base, "--jobs", "4")
    assert seq == par


def test_sweep_structure(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--kind", "i1", "--m", "2",
                           "--alpha", "1", "--mu", "2.5", "--lambda", "1",
                           "--kappa", "2", "--alpha-start", "10",
                           "--alpha-stop", "10000", "--count", "4",
                           "--spacing", "log", "--methods", "oracle,asym")
    assert code == 0
    lines = out.strip().splitlines()
    header = lines[0].split(",")
    assert header == ["alpha", "method", "K", "sign", "log_abs",
                      "rel_err_vs_oracle", "status"]
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 8
    alphas = [float(r[0]) for r in rows]
    assert alphas == sorted(alphas)
    assert alphas[0] == 10.0 and alphas[-1] == 10000.0
    # rows ordered by (alpha, method)
    for i in range(0, len(rows), 2):
        assert rows[i][1] == "asym" and rows[i + 1][1] == "oracle"


def test_sweep_oracle_only_drops_rel_err(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--kind", "i1", "--m", "0",
                           "--alpha", "1", "--mu", "2", "--lambda", "1",
                           "--kappa", "2", "--alpha-start", "10",
                           "--alpha-stop", "100", "--count", "2",
                           "--methods", "oracle")
    assert code == 0
    header = out.splitlines()[0].split(",")
    assert "rel_err_vs_oracle" not in header


def test_sweep_single_point_failure_recorded(capsys):
    # closed form is unknown for these parameters: rows carry the error
    # status and the sweep still completes
    code, out, _ = run_cli(capsys, "sweep", "--kind", "i1", "--m", "1",
                           "--alpha", "1", "--mu", "2", "--lambda", "1.5",
                           "--kappa", "2", "--alpha-start", "10",
                           "--alpha-stop", "100", "--count", "2",
                           "--methods", "closed")
    assert code == 1
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert all("error" in line for line in lines[1:])


def test_compare_row_count_and_flat_m0(capsys):
    code, out, _ = run_cli(capsys, "compare", "--kind", "i1", "--m", "0",
                           "--alpha", "50", "--mu", "2", "--lambda", "1",
                           "--kappa", "2", "--order", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1 + 4  # header plus K+1 rows
    for line in lines[1:]:
        rel = float(line.split(",")[3])
        assert rel <= 1e-10


def test_coeffs_f_ladder(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--ladder", "f", "--m", "3",
                           "--alpha", "10", "--n", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["provenance"] == "engine"
    assert doc["values"][:3] == pytest.approx([1.0, 3.0, -2.0])


def test_coeffs_saddle_ladder(capsys):
    _, out, _ = run_cli(capsys, "coeffs", "--ladder", "saddle-geg", "--c",
                        "1", "--d", "3", "--n", "2")
    doc = json.loads(out)
    assert doc["values"][0] == pytest.approx(math.sqrt(3.0) / 4.0)
    assert doc["values"][1] == pytest.approx(-1.0 / 12.0)


def test_coeffs_ext_d_ladder(capsys):
    _, out, _ = run_cli(capsys, "coeffs", "--ladder", "ext-d", "--sigma", "1",
                        "--lambda", "2", "--kappa", "2", "--m", "1", "--k", "1")
    doc = json.loads(out)
    assert doc["provenance"] == "printed"
    assert doc["values"][1] == pytest.approx(37.0 / 12.0)


def test_coeffs_unknown_ladder(capsys):
    code, _, err = run_cli(capsys, "coeffs", "--ladder", "nope")
    assert code == 2
    assert "error" in json.loads(err)


def test_eval_pretty_format(capsys):
    code, out, _ = run_cli(capsys, "eval", "--kind", "i2", "--m", "1",
                           "--alpha", "200", "--mu", "2", "--lambda", "1",
                           "--format", "pretty")
    assert code == 0
    assert out.startswith("functional: lag_shannon")


def test_sweep_symmetric_ratio_tracks_first_correction(capsys):
    # asym/closed ratio on the symmetric special case behaves like
    # 1 + (2m^2 - 2m + 3)/(8 alpha)
    m = 2
    code, out, _ = run_cli(capsys, "sweep", "--kind", "i3", "--m", str(m),
                           "--alpha", "1", "--a", "-0.5", "--b", "-1.5",
                           "--c", "1", "--d", "1", "--kappa", "2",
                           "--alpha-start", "100", "--alpha-stop", "400",
                           "--count", "3", "--methods", "asym,closed",
                           "--order", "0")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    by_alpha = {}
    for r in rows:
        by_alpha.setdefault(float(r[0]), {})[r[1]] = float(r[4])
    for alpha, logs in by_alpha.items():
        ratio = math.exp(logs["closed"] - logs["asym"])
        expect = 1.0 + (2 * m * m - 2 * m + 3) / (8 * alpha)
        assert ratio == pytest.approx(expect, abs=40.0 / alpha ** 2)


def test_sweep_spec_validation():
    from entrofun.cli import SweepSpec
    from entrofun.functional import Functional
    F = Functional.lag_renyi(1, 50.0, 2.0, 1.0, 2.0)
    with pytest.raises(ValueError):
        SweepSpec(F, 10.0, 100.0, 1)
    with pytest.raises(ValueError):
        SweepSpec(F, -1.0, 100.0, 3)
    with pytest.raises(ValueError):
        SweepSpec(F, 10.0, 100.0, 3, methods=())
    grid = SweepSpec(F, 10.0, 10000.0, 4).grid()
    assert grid[0] == 10.0 and grid[-1] == 10000.0
    assert all(grid[i] < grid[i + 1] for i in range(3))


def test_forced_order(capsys):
    _, out, _ = run_cli(capsys, "eval", "--kind", "i1", "--m", "2",
                        "--alpha", "150", "--mu", "2", "--lambda", "1",
                        "--kappa", "2.5", "--order", "3")
    doc = json.loads(out)
    assert doc["truncation_used"] == 4
    assert len(doc["terms"]) == 4
