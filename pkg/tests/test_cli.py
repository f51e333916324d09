import io
import json
import subprocess
import sys

import pytest

from a2braid.braid import rho_generator
from a2braid.cli import main
from a2braid.linalg import RepMatrix

THETA = "V 0 src 1 2 3\nV 4 snk 5 6 7\nE 1 5\nE 2 7\nE 3 6\n"


def run(capsys, *argv):
    try:
        rc = main(list(argv))
    except SystemExit as exc:
        rc = exc.code
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_matrix_json(capsys):
    rc, out, _ = run(capsys, "matrix", "--n", "1", "--k", "2", "--gen", "A(1,3)")
    assert rc == 0
    m = RepMatrix.from_json(out)
    assert m == rho_generator(1, 2, 1, 3)
    assert json.loads(out)["basis_order"] == "lex"


def test_matrix_out_file(capsys, tmp_path):
    target = tmp_path / "m.tex"
    rc, out, _ = run(capsys, "matrix", "--gen", "A(2,3)", "--format", "latex", "--out", str(target))
    assert rc == 0 and out == ""
    assert target.read_text().startswith("\\begin{pmatrix}")


def test_matrix_text_lists_basis(capsys):
    rc, out, _ = run(capsys, "matrix", "--k", "3", "--word", "A(1,2) A(3,4)^-1", "--format", "text")
    assert rc == 0
    assert "(0, 0), (0, 1), (1, 0), (1, 1)" in out


@pytest.mark.parametrize("argv", [
    ("matrix", "--gen", "A(1,9)"),
    ("matrix", "--gen", "A(1,2) A(1,3)"),
    ("matrix", "--word", "B(1,2)"),
    ("matrix",),
    ("matrix", "--n", "-1", "--gen", "A(1,2)"),
    ("eval", "--gen", "A(1,2)"),
    ("verify", "--suite", "nope"),
    ("bogus",),
])
def test_usage_errors(capsys, argv):
    rc, _, err = run(capsys, *argv)
    assert rc == 2
    assert err


def test_eval_at_root(capsys):
    rc, out, _ = run(capsys, "eval", "--gen", "A(2,3)", "--root", "5")
    assert rc == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    first = complex(lines[0].split()[0])
    assert abs(first - complex(__import__("cmath").exp(-16j * 3.141592653589793 / 15))) < 1e-11


def test_eval_identity_at_v1(capsys):
    rc, out, _ = run(capsys, "eval", "--gen", "A(1,3)", "--v-arg", "0")
    assert rc == 0
    assert "1+0j  0+0j" in out


def test_eval_pole(capsys):
    rc, _, err = run(capsys, "eval", "--gen", "A(1,2)", "--root", "3")
    assert rc == 3
    assert "pole" in err


@pytest.mark.parametrize("suite", ["formulas", "recoupling", "relations", "oracle"])
def test_verify_suites_pass(capsys, suite):
    rc, out, _ = run(capsys, "verify", "--suite", suite, "--max-n", "3")
    assert rc == 0
    assert "FAIL" not in out


def test_verify_failure_exit_code(capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "relations", "--k", "3")
    assert rc == 4
    assert "FAIL" in out


def test_oracle_diagram_file(capsys, tmp_path):
    f = tmp_path / "theta.txt"
    f.write_text(THETA)
    rc, out, _ = run(capsys, "oracle", "--diagram", str(f))
    assert rc == 0
    assert out.strip() == "v^9 + 2*v^3 + 2*v^-3 + v^-9"


def test_oracle_diagram_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(THETA))
    rc, out, _ = run(capsys, "oracle", "--diagram", "-")
    assert rc == 0 and out.strip()


def test_oracle_bad_diagram(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("V 0 src 1 2\n")
    rc, _, err = run(capsys, "oracle", "--diagram", str(f))
    assert rc == 2 and "line 1" in err


def test_oracle_generator_compare(capsys):
    rc, _, err = run(capsys, "oracle", "--gen", "A(1,4)", "--compare")
    assert rc == 0 and "agrees" in err


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "a2braid", "verify", "--suite", "formulas", "--max-n", "2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.strip().endswith("6/6 passed")
