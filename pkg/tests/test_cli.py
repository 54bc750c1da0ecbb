import json
import subprocess
import sys

import pytest

from moycalc.cli import run
from moycalc.laurent import HalfLaurent, quantum_binomial

CIRCLE = '{"strands": 1, "top_colors": [1], "slices": []}'
THETA = json.dumps({"strands": 2, "top_colors": [2, 0],
                    "slices": [{"pos": 1, "dir": "right", "color": 1}, {"pos": 1, "dir": "left", "color": 1}]})
BAD = '{"strands": 2, "top_colors": [1, 1], "slices": [{"pos": 1, "dir": "right", "color": 1}]}'
TREFOIL = '{"strands": 2, "color": 1, "word": [1, 1, 1]}'


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_circle(capsys):
    code, out, _ = _run(capsys, "eval-web", "-N", "2", CIRCLE)
    assert code == 0
    assert json.loads(out) == [[-2, 1], [2, 1]]


def test_eval_from_file(tmp_path, capsys):
    path = tmp_path / "theta.json"
    path.write_text(THETA)
    code, out, _ = _run(capsys, "eval-web", "-N", "3", str(path))
    assert code == 0
    assert HalfLaurent.from_json(json.loads(out)) == HalfLaurent.from_json([[-6, 1], [-2, 2], [2, 2], [6, 1]])


def test_naive_and_workers_agree(capsys):
    outs = [_run(capsys, "eval-web", "-N", "4", *flags, THETA)[1]
            for flags in ([], ["--method", "naive"], ["--workers", "2"])]
    assert outs[0] == outs[1] == outs[2]


def test_invalid_web(capsys):
    code, _, err = _run(capsys, "eval-web", "-N", "2", BAD)
    assert code == 2
    assert "closure" in err and "(0, 2)" in err


def test_malformed_json(capsys):
    code, _, err = _run(capsys, "eval-web", "-N", "2", '{"strands": ')
    assert code == 2 and "malformed JSON" in err


def test_missing_file(capsys):
    code, _, err = _run(capsys, "eval-web", "-N", "2", "/nonexistent/web.json")
    assert code == 2 and "cannot read" in err


def test_cap_exceeded(capsys):
    code, _, err = _run(capsys, "eval-web", "-N", "6", "--section-cap", "3", CIRCLE)
    assert code == 2 and "cap" in err


def test_bad_cap(capsys):
    code, _, _ = _run(capsys, "eval-web", "-N", "2", "--state-cap", "0", CIRCLE)
    assert code == 2


def test_verify_composition(capsys):
    code, out, _ = _run(capsys, "verify-composition", "-M", "1", "-N", "1", CIRCLE)
    assert code == 0 and json.loads(out)["holds"] is True


def test_invariant(capsys):
    code, out, _ = _run(capsys, "invariant", "-N", "2", TREFOIL)
    data = json.loads(out)
    assert code == 0
    assert data["P_N"] == [[2, 1], [6, 1], [10, 1], [18, -1]]
    assert "unnormalized" in data


def test_invariant_recolored(capsys):
    code, out, _ = _run(capsys, "invariant", "-N", "4", "-m", "2", '{"strands": 1, "color": 1, "word": []}')
    assert code == 0
    assert HalfLaurent.from_json(json.loads(out)["P_N"]) == quantum_binomial(4, 2)


def test_invalid_braid(capsys):
    code, _, err = _run(capsys, "invariant", "-N", "2", '{"strands": 2, "color": 1, "word": [3]}')
    assert code == 2 and "generator" in err


def test_bounds(capsys):
    code, out, _ = _run(capsys, "bounds", "-m", "1", "-N", "2", TREFOIL)
    chain, poly = json.loads(out)
    assert code == 0
    assert chain["kind"] == "chain-level" and poly["kind"] == "polynomial-level"
    assert poly["window"] == ["1", "11"]


def test_bounds_need_N_above_m(capsys):
    code, _, _ = _run(capsys, "bounds", "-m", "2", "-N", "2", TREFOIL)
    assert code == 2


def test_convergence_text(capsys):
    code, out, _ = _run(capsys, "convergence", "-m", "1", "-N", "2..4", "--format", "text", TREFOIL)
    assert code == 0
    assert "19/3" in out


def test_selftest_subset(capsys):
    code, out, _ = _run(capsys, "selftest", "--only", "1,2")
    assert code == 0
    assert out.count("[PASS]") == 2


def test_entry_point_subprocess():
    proc = subprocess.run([sys.executable, "-m", "moycalc.cli", "eval-web", "-N", "2", CIRCLE],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == [[-2, 1], [2, 1]]


def test_help_mentions_env_caps(capsys):
    with pytest.raises(SystemExit):
        run(["--help"])
    assert "MOYCALC_STATE_CAP" in capsys.readouterr().out
