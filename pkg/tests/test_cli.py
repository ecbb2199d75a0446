import json
import subprocess
import sys

import pytest

from coxgrowth import corpus
from coxgrowth.cli import main
from coxgrowth.reproduce import LANNER_DENOMINATOR_TEXT, parse_poly_text


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_growth_of_a2(capsys):
    code, rec = run_json(capsys, "growth", "--symbol", "[3]")
    assert code == 0
    assert set(rec) == {"command", "input", "result", "warnings", "timings"}
    assert rec["result"]["numerator"] == [1, 2, 2, 1]
    assert rec["result"]["denominator"] == [1]
    assert rec["timings"] == {}


def test_growth_of_lanner_simplex(capsys):
    code, rec = run_json(capsys, "growth", "--symbol", "[5,3,3,3]")
    assert code == 0
    assert rec["result"]["denominator"] == list(parse_poly_text(LANNER_DENOMINATOR_TEXT).coeffs)
    assert rec["result"]["reciprocity"] == "reciprocal"


def test_growth_coefficients_from_packaged_file(capsys):
    code, rec = run_json(capsys, "growth", "--file", "makarov.cox", "--coeffs", "10")
    assert code == 0
    assert rec["result"]["coefficients"] == [1, 7, 27, 78, 190, 414, 835, 1594, 2925, 5216, 9109]
    assert rec["warnings"]


def test_growth_from_real_file(tmp_path, capsys):
    path = tmp_path / "g.cox"
    path.write_text(corpus.get("triangle-7-3").text)
    code, rec = run_json(capsys, "growth", "--file", str(path))
    assert code == 0 and rec["input"] == {"file": str(path)} and not rec["warnings"]


def test_rate_of_triangle_group(capsys):
    code, rec = run_json(capsys, "rate", "--symbol", "[7,3]")
    r = rec["result"]
    assert code == 0
    assert r["rate"].startswith("1.17628")
    assert "Salem" in r["number_class"]["flags"]
    lo, hi = r["interval"]
    assert float(lo) < 1.1762808182599 < float(hi)


def test_rate_of_kaplinskaja(capsys):
    code, rec = run_json(capsys, "rate", "--file", "kaplinskaja.cox")
    r = rec["result"]
    assert r["rate"].startswith("2.08378")
    assert r["number_class"]["flags"] == ["Perron"]
    assert r["degree"] == 32 and r["self_reciprocal"] == "palindromic"


def test_rate_of_finite_group(capsys):
    code, rec = run_json(capsys, "rate", "--symbol", "[3,3]")
    assert code == 0 and rec["result"]["rate"] == "1" and rec["result"]["finite"]


def test_rate_precision(capsys):
    code, rec = run_json(capsys, "rate", "--symbol", "[3,5,3]", "--precision", "1e-30")
    lo, hi = rec["result"]["interval"]
    assert lo.startswith("1.35098033771623731021140357306")
    assert hi.startswith("1.35098033771623731021140357306")


def test_check_makarov(capsys):
    code, rec = run_json(capsys, "check", "--file", "makarov.cox", "--dim", "5")
    r = rec["result"]
    assert code == 0
    assert r["compactness"]["verdict"] == "compact"
    assert abs(float(r["prism_length"]["value"][0]) - 1.07448057) < 1e-8


def test_check_spherical(capsys):
    code, rec = run_json(capsys, "check", "--symbol", "[3,3,3]", "--dim", "3")
    r = rec["result"]
    assert code == 0 and r["verdict"] == "not hyperbolic" and r["diagram"] == "spherical"
    assert (r["signature"]["positives"], r["signature"]["negatives"]) == (4, 0)


def test_check_tumarkin(capsys):
    code, rec = run_json(capsys, "check", "--file", "tumarkin.cox", "--dim", "5")
    r = rec["result"]
    assert r["compactness"]["verdict"] == "compact"
    assert r["diagnostics"]["dotted_count"] == 1


@pytest.mark.parametrize("name", corpus.NAMES)
def test_every_fixture_passes_check(name, capsys):
    code, rec = run_json(capsys, "check", "--fixture", name)
    assert code == 0
    assert rec["result"]["signature"]["certified"]


@pytest.mark.parametrize(
    "argv",
    [
        ["rate", "--symbol", "[5,3"],
        ["rate", "--file", "/nonexistent/x.cox"],
        ["rate", "--symbol", "[7,3]", "--precision", "abc"],
        ["growth", "--symbol", "[3]", "--coeffs", "-1"],
    ],
)
def test_input_errors_exit_1(argv, capsys):
    assert main(argv) == 1
    assert "input error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["growth"], ["nonsense"], ["rate", "--symbol", "[3]", "--file", "x"]])
def test_usage_errors_exit_1(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "coxgrowth", "rate", "--symbol", "[5,3,3,4]", "--json"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b


def test_human_output(capsys):
    assert main(["rate", "--symbol", "[8,3]"]) == 0
    out = capsys.readouterr().out
    assert "rate: 1.23039" in out


def test_reproduce_dim5(capsys):
    code = main(["reproduce", "dim5"])
    out = capsys.readouterr().out
    assert code == 0
    assert "name" in out.splitlines()[0] and "0 failed" in out


def test_computation_failure_exits_2(tmp_path, capsys):
    path = tmp_path / "big.cox"
    path.write_text("rank 26\n" + "".join(f"edge {i} {i + 1} 3\n" for i in range(1, 26)))
    assert main(["growth", "--file", str(path)]) == 2
    assert "computation failed" in capsys.readouterr().err


def test_violated_invariant_exits_3(capsys):
    # dotted edges on both sides of the cut node 3
    assert main(["check", "--symbol", "[inf,3,3,inf]"]) == 3
    assert "dotted_cut_violations: [3]" in capsys.readouterr().out
