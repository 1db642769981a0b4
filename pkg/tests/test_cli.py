import json
import subprocess
import sys

import pytest

from oracles import PAPER_VALUES
from tanhint import render
from tanhint.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, run_verification
from tanhint.closed_form import ZetaCombination, theorem_sum, validate_spec


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_latex(capsys):
    code, out, _ = run(capsys, "eval", "--m", "2", "--n", "2", "--format", "latex")
    assert code == EXIT_OK
    assert out.strip() == r"\frac{14\,\zeta(3)}{\pi^{2}}"


def test_eval_latex_fraction_and_signs(capsys):
    _, out, _ = run(capsys, "eval", "--m", "4", "--n", "2", "--format", "latex")
    assert out.strip() == r"\frac{56\,\zeta(3)}{3\,\pi^{2}} - \frac{124\,\zeta(5)}{\pi^{4}}"


def test_eval_text(capsys):
    _, out, _ = run(capsys, "eval", "--m", "3", "--n", "3")
    assert out.strip() == "J(3,3) = -7*zeta(3)/pi^2 + 186*zeta(5)/pi^4"


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--m", "6", "--n", "2", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == {
        "m": 6,
        "n": 2,
        "terms": [{"s": 3, "coeff": "322/15"}, {"s": 5, "coeff": "-248"}, {"s": 7, "coeff": "762"}],
    }


@pytest.mark.parametrize(
    "m, n, word",
    [("3", "2", "parity"), ("2", "4", "m >= n"), ("3", "1", "n >= 2"), ("3", "4", "m >= n")],
)
def test_invalid_spec_exit_code(capsys, m, n, word):
    code, out, err = run(capsys, "eval", "--m", m, "--n", n)
    assert code == EXIT_USAGE
    assert out == ""
    assert word in err and len(err.strip().splitlines()) == 1


def test_verify_invalid_spec(capsys):
    assert run(capsys, "verify", "--m", "3", "--n", "4")[0] == EXIT_USAGE


@pytest.mark.parametrize("argv", [["eval", "--m", "x", "--n", "2"], ["eval", "--m", "2", "--n", "2", "--format", "xml"], ["frobnicate"], []])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--m", "4", "--n", "2")
    assert code == EXIT_OK
    assert "verdict        : PASS" in out


def test_verify_j77_json(capsys):
    code, out, _ = run(capsys, "verify", "--m", "7", "--n", "7", "--format", "json")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["verdict"] == "PASS" and report["exact_match"] is True
    assert render.from_json_obj(report)[1].as_dict() == PAPER_VALUES[(7, 7)]
    assert float(report["discrepancy"]) <= 1e-10


def test_verify_failure_exit_code(capsys, monkeypatch):
    import tanhint.cli as cli

    monkeypatch.setattr(cli, "oracle_closed_form", lambda spec: ZetaCombination.from_mapping({3: 1}))
    code, out, _ = run(capsys, "verify", "--m", "2", "--n", "2")
    assert code == EXIT_FAIL
    assert "exact match    : NO" in out


def test_verify_fails_on_numeric_mismatch(capsys, monkeypatch):
    import tanhint.cli as cli

    wrong = ZetaCombination.from_mapping({3: 15})
    monkeypatch.setattr(cli, "theorem_sum", lambda spec: wrong)
    monkeypatch.setattr(cli, "oracle_closed_form", lambda spec: wrong)
    assert run(capsys, "verify", "--m", "2", "--n", "2")[0] == EXIT_FAIL


def test_table_rows(capsys):
    code, out, _ = run(capsys, "table", "--max-m", "7")
    rows = out.strip().splitlines()
    assert code == EXIT_OK
    heads = [r.split(" = ")[0] for r in rows]
    assert heads == [f"J({m},{n})" for m, n in [(2, 2), (3, 3), (4, 2), (4, 4), (5, 3), (5, 5), (6, 2), (6, 4), (6, 6), (7, 3), (7, 5), (7, 7)]]
    assert {f"J({m},{n})" for m, n in PAPER_VALUES} <= set(heads)


def test_table_single_row(capsys):
    _, out, _ = run(capsys, "table", "--max-m", "2")
    assert out.strip().splitlines() == ["J(2,2) = 14*zeta(3)/pi^2"]


def test_table_bad_max_m(capsys):
    assert run(capsys, "table", "--max-m", "1")[0] == EXIT_USAGE


def test_table_check(capsys):
    code, out, _ = run(capsys, "table", "--max-m", "8", "--check")
    assert code == EXIT_OK
    rows = out.strip().splitlines()
    assert len(rows) == 16 and all("[PASS" in r for r in rows)


def test_table_json_and_latex(capsys):
    _, out, _ = run(capsys, "table", "--max-m", "7", "--format", "json")
    rows = json.loads(out)
    for row in rows:
        spec, zc = render.from_json_obj(row)
        if (spec.m, spec.n) in PAPER_VALUES:
            assert zc.as_dict() == PAPER_VALUES[(spec.m, spec.n)]
    _, out, _ = run(capsys, "table", "--max-m", "3", "--format", "latex")
    assert out.splitlines()[0] == r"J(2,2) &= \frac{14\,\zeta(3)}{\pi^{2}} \\"


@pytest.mark.parametrize("mn", sorted(PAPER_VALUES))
def test_json_roundtrip_byte_stable(capsys, mn):
    _, out, _ = run(capsys, "eval", "--m", str(mn[0]), "--n", str(mn[1]), "--format", "json")
    spec, zc = render.from_json(out)
    assert render.to_json(spec, zc) + "\n" == out
    assert zc.as_dict() == PAPER_VALUES[mn]


def test_from_json_rejects_bad_payloads():
    with pytest.raises(ValueError):
        render.from_json('{"m":2,"n":2,"terms":[{"s":3,"coeff":1.5}]}')
    with pytest.raises(ValueError):
        render.from_json('{"m":4,"n":2,"terms":[{"s":5,"coeff":"-124"},{"s":3,"coeff":"56/3"}]}')
    with pytest.raises(ValueError):
        render.from_json('{"m":3,"n":2,"terms":[]}')


def test_render_unknown_format():
    with pytest.raises(ValueError):
        render.render(validate_spec(2, 2), theorem_sum(validate_spec(2, 2)), "xml")


def test_run_verification_object():
    v = run_verification(validate_spec(5, 5))
    assert v.passed and v.discrepancy < 1e-10


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tanhint", "eval", "--m", "3", "--n", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 2
    assert "parity" in proc.stderr
