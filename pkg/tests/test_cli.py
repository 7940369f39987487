"""End-to-end command-line tests (subprocess, golden outputs, exit codes)."""

import json
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "schemealg.cli"]


def run_cli(*args, stdin=None):
    return subprocess.run(
        CLI + list(args), input=stdin, capture_output=True, text=True, timeout=120
    )


@pytest.fixture(scope="module")
def ex1_file(tmp_path_factory):
    p = tmp_path_factory.mktemp("specs") / "ex1.json"
    p.write_text('{"type": "orbit", "m": 9, "r": 2}')
    return str(p)


@pytest.fixture(scope="module")
def ex2_file(tmp_path_factory):
    p = tmp_path_factory.mktemp("specs") / "ex2.json"
    p.write_text('{"type": "orbit", "m": 8, "r": 3}')
    return str(p)


def test_validate_text(ex1_file):
    r = run_cli("validate", ex1_file)
    assert r.returncode == 0
    assert r.stdout.splitlines() == [
        "valid: yes",
        "order: 9",
        "classes: 2",
        "valencies: 1 6 2",
        "origin: orbit(m=9, r=2)",
    ]


def test_validate_relations_stdin():
    doc = '{"type": "relations", "labels": [[0,1,1],[1,0,1],[1,1,0]]}'
    r = run_cli("validate", "-", "--format", "json", stdin=doc)
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out == {
        "valid": True,
        "order": 3,
        "classes": 1,
        "valencies": [1, 2],
        "origin": "relations",
    }


def test_validate_tensor_input():
    doc = json.dumps(
        {"type": "tensor", "p": [[[1, 0], [0, 1]], [[0, 1], [2, 1]]]}
    )
    r = run_cli("validate", "-", stdin=doc)
    assert r.returncode == 0
    assert "valid: yes" in r.stdout


def test_chartab_text_golden(ex1_file):
    r = run_cli("chartab", ex1_file)
    assert r.returncode == 0
    assert r.stdout.splitlines() == [
        "order: 9",
        "valencies: 1 6 2",
        "P:",
        "  1 6 2",
        "  1 0 -1",
        "  1 -3 2",
        "Q:",
        "  1 6 2",
        "  1 0 -1",
        "  1 -3 2",
    ]


def test_chartab_irrational_json():
    doc = '{"type": "orbit", "m": 5, "r": 4}'
    r = run_cli("chartab", "-", "--format", "json", stdin=doc)
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["order"] == 5
    assert out["P"][0] == ["1", "2", "2"]
    entry = out["P"][1][1]
    assert entry["minpoly"] == ["-1", "1", "1"]  # x^2 + x - 1, ascending
    lo, hi = entry["interval"]
    from fractions import Fraction

    assert Fraction(lo) < Fraction(hi)


def test_chartab_digits_control():
    doc = '{"type": "orbit", "m": 5, "r": 4}'
    r = run_cli("chartab", "-", "--digits", "4", stdin=doc)
    assert r.returncode == 0
    assert "~0.6180" in r.stdout
    assert "~-1.6180" in r.stdout


def test_ppoly_json(ex1_file):
    r = run_cli("ppoly", ex1_file, "--format", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out == {
        "p_polynomial": True,
        "generator_class": 1,
        "distance_relabeling": [0, 1, 2],
        "eliminant": ["0", "-18", "-3", "1"],
    }


def test_ppoly_negative(ex2_file):
    r = run_cli("ppoly", ex2_file)
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "p-polynomial: no"
    assert len(lines) == 4  # one diagnostic per class


def test_express_text(ex2_file):
    r = run_cli("express", ex2_file, "--classes", "1,2")
    assert r.returncode == 0
    assert r.stdout.splitlines() == [
        "subset: 1 2",
        "x0 = 1",
        "x3 = 1/2*x2^2 - 1",
    ]


def test_mingen(ex2_file):
    r = run_cli("mingen", ex2_file, "--format", "json")
    assert r.returncode == 0
    assert json.loads(r.stdout) == {
        "minimal_size": 2,
        "generating_sets": [[1, 2], [1, 3]],
    }


def test_generator(ex2_file):
    r = run_cli("generator", ex2_file, "--format", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["coefficients"] == [0, 7, 0, 1]
    assert out["changes"] == [[1, 7]]
    assert out["eliminant"] == ["783", "2", "-784", "-2", "1"]
    assert len(out["expressions"]) == 4


def test_gb_degree(ex1_file):
    r = run_cli("gb", ex1_file)
    assert r.returncode == 0
    assert r.stdout.splitlines() == [
        "order: degree",
        "generators:",
        "  x0 - 1",
        "  x2^2 - x2 - 2",
        "  x1*x2 - 2*x1",
        "  x1^2 - 3*x1 - 6*x2 - 6",
        "normal set: 1 x1 x2",
    ]


def test_gb_lex(ex2_file):
    r = run_cli("gb", ex2_file, "--order", "lex", "--smallest", "2")
    assert r.returncode == 0
    assert r.stdout.splitlines() == [
        "order: lex",
        "smallest: x2",
        "generators:",
        "  x2^3 - 4*x2",
        "  x3 - 1/2*x2^2 + 1",
        "  x1*x2 - 2*x1",
        "  x1^2 - 2*x2^2 - 4*x2",
        "  x0 - 1",
        "normal set: 1 x2 x2^2 x1",
    ]


def test_reruns_are_byte_identical(ex1_file, ex2_file):
    for args in (
        ("chartab", ex1_file, "--format", "json"),
        ("gb", ex2_file, "--order", "lex", "--smallest", "1"),
        ("generator", ex2_file),
    ):
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout


# ---------------------------------------------------------------------------
# failure modes
# ---------------------------------------------------------------------------


def test_exit_2_bad_json():
    r = run_cli("validate", "-", stdin="this is not json")
    assert r.returncode == 2
    assert "error:" in r.stderr


def test_exit_2_unknown_type():
    r = run_cli("validate", "-", stdin='{"type": "mystery"}')
    assert r.returncode == 2


def test_exit_2_unknown_keys():
    r = run_cli("validate", "-", stdin='{"type": "orbit", "m": 9, "r": 2, "x": 1}')
    assert r.returncode == 2


def test_exit_2_missing_file():
    r = run_cli("validate", "/nonexistent/path.json")
    assert r.returncode == 2


def test_exit_2_usage_error(ex1_file):
    r = run_cli("no-such-command", ex1_file)
    assert r.returncode == 2


def test_exit_2_gb_flag_misuse(ex1_file):
    r = run_cli("gb", ex1_file, "--order", "lex")
    assert r.returncode == 2
    r = run_cli("gb", ex1_file, "--smallest", "1")
    assert r.returncode == 2


def test_exit_3_asymmetric_labels():
    r = run_cli("validate", "-", stdin='{"type": "relations", "labels": [[0,1],[2,0]]}')
    assert r.returncode == 3
    assert "not a scheme:" in r.stderr


def test_exit_3_bad_radix():
    r = run_cli("validate", "-", stdin='{"type": "orbit", "m": 9, "r": 3}')
    assert r.returncode == 3


def test_exit_3_nonassociative_tensor():
    doc = json.dumps(
        {
            "type": "tensor",
            "p": [
                [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                [[0, 1, 0], [6, 4, 5], [0, 1, 1]],
                [[0, 0, 1], [0, 1, 1], [2, 1, 0]],
            ],
        }
    )
    r = run_cli("validate", "-", stdin=doc)
    assert r.returncode == 3
    assert "not a scheme:" in r.stderr


def test_exit_4_inexpressible(ex2_file):
    r = run_cli("express", ex2_file, "--classes", "2,3")
    assert r.returncode == 4
    assert "analysis failed:" in r.stderr
