"""CLI surface: routing, exit codes, deterministic reports."""

import json

import pytest

from skewres.cli import main
from skewres.dieudonne import SkewMatrix
from skewres.exprio import lower1, matrix_to_json, parse

GOLD_P = "(q1-i)*(q2-j)"
GOLD_Q = "(q1-i)*(q2-k)"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_res_golden_q1(capsys):
    code, out, err = run(capsys, "res", "--wrt", "q1", GOLD_P, GOLD_Q)
    assert code == 0 and err == ""
    assert "is_zero: true" in out


def test_res_golden_q2_text_and_json(capsys):
    code, out, _ = run(capsys, "res", "--wrt", "q2", GOLD_P, GOLD_Q)
    assert code == 0
    assert "is_zero: false" in out
    assert "sdet_num: 2 + q1^2*4 + q1^4*2" in out

    code, out, _ = run(capsys, "res", "--wrt", "q2", GOLD_P, GOLD_Q, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "skewres/resultant"
    assert doc["version"] == 1
    assert doc["is_zero"] is False
    assert doc["sdet"]["num"] == ["2", "0", "4", "0", "2"]
    assert doc["sylvester"]["entries"][0][0]["den"] == [["1", "0", "0", "0"]]


def test_deterministic_output(capsys):
    first = run(capsys, "res", "--wrt", "q2", GOLD_P, GOLD_Q, "--json")
    second = run(capsys, "res", "--wrt", "q2", GOLD_P, GOLD_Q, "--json")
    assert first == second


def test_eval_spec_example(capsys):
    code, out, _ = run(capsys, "eval", GOLD_P, "--at", "i,j")
    assert code == 0
    assert out.strip() == "2k"


def test_eval_one_variable(capsys):
    code, out, _ = run(capsys, "eval", "q^2 + 1", "--at", "i")
    assert code == 0
    assert out.strip() == "0"
    code, _, err = run(capsys, "eval", "q^2 + 1", "--at", "i,j")
    assert code == 1 and "single point" in err


def test_exit_code_parse_failure(capsys):
    code, _, err = run(capsys, "res", "--wrt", "q1", "(q1-i", "q2")
    assert code == 1
    assert "offset" in err


def test_exit_code_hypothesis_violations(capsys):
    code, _, err = run(capsys, "bezout", "--wrt", "q1", GOLD_P, GOLD_Q)
    assert code == 2
    assert "singular" in err.lower() or "vanishes" in err

    code, _, err = run(capsys, "factor", GOLD_P, GOLD_Q, "--at", "i,j")
    assert code == 2
    assert "commute" in err


def test_exit_code_argv_problems(capsys):
    assert run(capsys, "res", "--wrt", "q3", "q1", "q2")[0] == 1
    assert run(capsys, "res", "--wrt", "q1", "q1*q2")[0] == 1
    assert run(capsys, "nope")[0] == 1
    assert run(capsys, "res", "--wrt", "q1", "q1", "q2", "--json", "--latex")[0] == 1


def test_bezout_and_kernel_flow(capsys):
    code, out, _ = run(capsys, "bezout", "--wrt", "q2", GOLD_P, GOLD_Q, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "skewres/bezout"
    assert doc["target"]["coeffs"]

    code, out, _ = run(capsys, "kernel", "--wrt", "q1", GOLD_P, GOLD_Q)
    assert code == 0
    assert "h: " in out and "k: " in out

    code, out, _ = run(capsys, "kernel", "--wrt", "q2", GOLD_P, GOLD_Q)
    assert code == 0
    assert "none" in out


def test_factor_report(capsys):
    code, out, _ = run(capsys, "factor", GOLD_P, GOLD_Q, "--q1", "i", "--q1", "j", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["holds"] is True
    assert len(doc["q1_factors"]) == 1
    assert doc["q1_factors"][0]["resultant_zero"] is True

    code, out, _ = run(capsys, "factor", GOLD_P, GOLD_Q, "--at", "i,3+4i")
    assert code == 0
    assert "common_zero_hypothesis: true" in out
    assert "common_zero_criterion: true" in out


def test_disc_crossed_pairing(capsys):
    code, out, _ = run(capsys, "disc", "--var", "q1", "(q1-i)*(q1-i)*(q2-j)")
    assert code == 0
    assert "is_zero: false" in out
    assert "sdet_num: 16 + q1^2*32 + q1^4*16" in out
    assert run(capsys, "disc", "--var", "q1", "q2-j")[0] == 1


def test_symm_and_latex(capsys):
    code, out, _ = run(capsys, "symm", "q - i")
    assert code == 0
    assert out.strip() == "1 + q^2"
    code, out, _ = run(capsys, "res", "--wrt", "q2", GOLD_P, GOLD_Q, "--latex")
    assert code == 0
    assert "q_1" in out


def test_det_subcommand(capsys):
    mat = SkewMatrix([
        [lower1(parse("q - i")), lower1(parse("1"))],
        [lower1(parse("0")), lower1(parse("q + i"))],
    ])
    text = json.dumps(matrix_to_json(mat))
    code, out, _ = run(capsys, "det", text)
    assert code == 0
    assert "is_zero: false" in out
    assert "sdet_num: 1 + q^2*2 + q^4" in out
    code, out, _ = run(capsys, "det", text, "--json")
    doc = json.loads(out)
    assert doc["sdet"]["num"] == ["1", "0", "2", "0", "1"]
    assert run(capsys, "det", "not json")[0] == 1
    assert run(capsys, "det", '{"schema": "skewres/matrix", "version": 2, "entries": []}')[0] == 1


def test_selftest_all_pass(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln]
    assert lines and all(ln.startswith("PASS") for ln in lines)
    assert len(lines) >= 6
