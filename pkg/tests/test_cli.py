import io
import os
import subprocess
import sys
from pathlib import Path

import pytest

from qcalc.cli import main, repl, resolve_defs, shipped_file

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).resolve().parent / "golden"


def call(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    old = dict(os.environ)
    try:
        if env is not None:
            os.environ.update(env)
        code = main(list(argv), out, err)
    finally:
        os.environ.clear()
        os.environ.update(old)
    return code, out.getvalue(), err.getvalue()


def test_eval_sum():
    assert call("eval", "3 m + 4 m", "--defs", "si.qdef") == (0, "7 m\n", "")


def test_eval_undefined():
    code, out, _ = call("eval", "1 m + 1 s")
    assert code == 1 and out == "undefined: incompatible dimensions: m vs s\n"


def test_eval_errors():
    code, out, err = call("eval", "1 / (0 m)")
    assert code == 1 and out == "" and err.startswith("error: ZeroInverse: ")
    code, _, err = call("eval", "3 +")
    assert code == 2 and err.startswith("syntax error at 1:3:")


def test_eval_float():
    assert call("eval", "0.5 m * 3", "--float")[1] == "1.5 m\n"


def test_defs_sources(tmp_path):
    defs = tmp_path / "tiny.qdef"
    defs.write_text("base ft\nunit yd = 3 ft\n")
    assert call("eval", "2 yd", "--defs", str(defs))[1] == "6 ft\n"
    assert call("eval", "2 yd", env={"QCALC_DEFS": str(defs)})[1] == "6 ft\n"
    assert resolve_defs(None) == shipped_file("si.qdef") or os.environ.get("QCALC_DEFS")
    code, _, err = call("eval", "1", "--defs", str(tmp_path / "missing.qdef"))
    assert code == 2 and "cannot read definitions" in err
    defs.write_text("base ft\nunit yd = 3 m\n")
    code, _, err = call("eval", "1", "--defs", str(defs))
    assert code == 2 and "tiny.qdef:2:" in err


@pytest.mark.parametrize("stem", ["partial_field", "missing_inverse"])
def test_check_model_golden(stem):
    code, out, _ = call("check-model", str(shipped_file(f"{stem}.model")))
    assert code == 1
    assert out == (GOLDEN / f"check_model_{stem}.txt").read_text()


def test_check_model_passing():
    code, out, _ = call("check-model", str(shipped_file("gf3_z2.model")))
    assert code == 0
    assert out.splitlines()[1:] == ["axioms: ok", "derived properties: ok"]


def test_check_model_fieldoid():
    path = str(shipped_file("fieldoid_union.model"))
    assert call("check-model", path)[0] == 0
    assert call("check-model", path, "--fieldoid")[0] == 0
    code, out, _ = call("check-model", str(shipped_file("non_squareable.model")), "--limit", "1")
    assert code == 1 and "squareable: (b1) b1 * b1 is undefined" in out


def test_decompose_fieldoid():
    code, out, _ = call("decompose-fieldoid", str(shipped_file("fieldoid_union.model")))
    assert code == 0
    assert out.splitlines()[0] == "2 components"
    assert call("decompose-fieldoid", str(shipped_file("non_squareable.model")))[0] == 1


def test_find_coherent():
    assert call("find-coherent", str(shipped_file("z4_extension.model"))) == (
        0,
        "no coherent unit system exists (4 candidates exhausted)\n",
        "",
    )
    code, out, _ = call("find-coherent", str(shipped_file("gf3_z2.model")))
    assert code == 0 and out == "coherent unit system: (1,0), (1,1) (1 of 4 candidates examined)\n"
    assert call("find-coherent", str(shipped_file("partial_field.model")))[0] == 1


def test_check_conditions():
    code, out, _ = call("check-conditions", str(shipped_file("gf2.model")))
    assert code == 0 and "coherent unit system: yes" in out
    code, out, _ = call("check-conditions", str(shipped_file("z4_extension.model")))
    assert code == 1 and "root indistinguishability: ok" in out
    code, out, _ = call("check-conditions", str(shipped_file("gf3_z2.model")), "--include-dimensionless")
    assert "((1,0), (2,0)) n=2" in out


def test_usage_errors(tmp_path):
    assert call()[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("check-model", str(tmp_path / "none.model"))[0] == 2
    bad = tmp_path / "bad.model"
    bad.write_text("elements: [a]\nadd: [[b]]\nmul: [[a]]\n")
    code, _, err = call("check-model", str(bad))
    assert code == 2 and "unknown entry" in err


def test_help_exits_zero():
    assert call("--help")[0] == 0


def test_repl(si):
    stdin = io.StringIO("3 m + 4 m\n\n1 m + 1 s\n:units\n3 +\n:quit\n2 m\n")
    out = io.StringIO()
    assert repl(si, stdin, out) == 0
    lines = out.getvalue().splitlines()
    assert lines[0] == "7 m"
    assert lines[1] == "undefined: incompatible dimensions: m vs s"
    assert lines[2].startswith("m kg s")
    assert lines[3].startswith("syntax error at 1:3")
    assert len(lines) == 4


def test_console_entry_point_from_repo_root():
    result = subprocess.run(
        [sys.executable, "-m", "qcalc", "check-model", "corpus/partial_field.model"],
        cwd=ROOT, capture_output=True, text=True,
    )
    assert result.returncode == 1
    assert "add-associative: (1, 1, -1) (1 + 1) + -1 = u but 1 + (1 + -1) = 1" in result.stdout
