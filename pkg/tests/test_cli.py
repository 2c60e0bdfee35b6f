import io
import json
import math
from fractions import Fraction
import subprocess
import sys

import pytest

import symrep.repforms
import symrep.verify
from symrep.cli import Config, run
from symrep.errors import DomainError


def call(*argv, env=None):
    out = io.StringIO()
    code = run(list(argv), out=out, env=env or {})
    return code, out.getvalue()


def test_dim():
    assert call("dim", "5,3,3,1") == (0, "4158\n")


def test_chi_all_methods():
    assert call("chi", "2,1", "3", "--method", "all") == (0, "mn=-1 trace=-1 fock=-1\n")


def test_chi_skew():
    code, out = call("chi", "2,2", "3", "--skew", "1", "--method", "all")
    assert code == 0 and out == "mn=-1 trace=-1 fock=-1\n"


def test_chartable_one():
    assert call("chartable", "1") == (0, "   1\n1  1\n")
    code, out = call("chartable", "1", "--format", "csv")
    assert out.splitlines()[1] == '"1","1"'


def test_chartable_formats():
    code, out = call("chartable", "3", "--format", "json")
    data = json.loads(out)
    assert data["entries"][1] == ["2", "0", "-1"]
    code, out = call("--format", "csv", "chartable", "3")
    assert out.splitlines()[0] == '"lambda","1+1+1","2+1","3"'


def test_partitions_and_tableaux():
    assert call("partitions", "4")[1].split() == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    code, out = call("--format", "json", "tableaux", "2,2", "--skew", "1")
    assert code == 0
    assert [t["rows"] for t in json.loads(out)] == [[[2], [1, 3]], [[1], [2, 3]]]


def test_rep_json_is_exact():
    code, out = call("--format", "json", "rep", "2,1", "--form", "seminormal")
    data = json.loads(out)
    assert code == 0
    flat = [x for m in data["matrices"].values() for row in m for x in row]
    assert "3/4" in flat and all(isinstance(x, str) for x in flat)


def test_rep_perm_and_orthogonal():
    code, out = call("--format", "json", "rep", "2,1", "--form", "seminormal", "--perm", "(1 2 3)")
    m = json.loads(out)["matrices"]["(1 2 3)"]
    assert sum(Fraction(m[i][i]) for i in range(2)) == -1
    code, out = call("rep", "2,2", "--skew", "1", "--form", "orthogonal")
    assert code == 0 and "s2:" in out
    assert call("rep", "2,2", "--skew", "1", "--form", "seminormal")[0] == 2


def test_jm_schur_frobenius_idempotent():
    code, out = call("jm", "3", "3")
    assert code == 0 and out.strip() == "2"
    code, out = call("schur", "1,1")
    assert out.strip() == "1/2 * x1^2 + -1 * x2"
    code, out = call("frobenius", "3")
    assert out.splitlines() == ["3: 1", "2,1: -1", "1,1,1: 1"]
    code, out = call("idempotent", "2", "1,1")
    assert out.splitlines() == ["1/2 * [1,2]", "-1/2 * [2,1]"]
    assert call("idempotent", "6", "6")[0] == 4
    assert call("--idempotent-cap", "6", "idempotent", "3", "3")[0] == 0


def test_fock_apply():
    assert call("fock-apply", "-2", "0") == (0, "1 v[2] + -1 v[1,1]\n")
    assert call("fock-apply", "2", "2,2")[1] == "1 v[2] + -1 v[1,1]\n"
    code, out = call("--format", "json", "fock-apply", "1", "2", "1,1")
    assert json.loads(out) == [{"partition": [1], "coeff": "2"}]


def test_exit_codes():
    assert call()[0] == 1
    assert call("bogus")[0] == 1
    assert call("dim", "1,2")[0] == 1
    assert call("fock-apply", "0", "1")[0] == 2
    assert call("chi", "2,1", "2")[0] == 2
    assert call("chartable", "25")[0] == 4
    assert call("--fock-cap", "3", "fock-apply", "-2", "2")[0] == 2
    assert call("--tol", "-1", "dim", "3")[0] == 2


def test_lambda_zero_message(capsys):
    code = run(["fock-apply", "0", "1"], out=io.StringIO(), env={})
    assert code == 2
    assert "not well defined" in capsys.readouterr().err


def test_environment_overrides():
    assert call("fock-apply", "-2", "2", env={"SYMREP_FOCK_CAP": "3"})[0] == 2
    assert call("fock-apply", "-2", "2", env={"SYMREP_FOCK_CAP": "4"})[0] == 0
    assert call("--fock-cap", "4", "fock-apply", "-2", "2", env={"SYMREP_FOCK_CAP": "3"})[0] == 0


def test_config_validation():
    with pytest.raises(DomainError):
        Config(float_tolerance=0)
    with pytest.raises(DomainError):
        Config(fock_cap=0)
    with pytest.raises(DomainError):
        Config(output_format="xml")


def test_output_is_deterministic():
    for argv in (["chartable", "5"], ["--format", "json", "rep", "3,1", "--form", "orthogonal"], ["verify", "--n", "3"]):
        assert call(*argv) == call(*argv)


def test_verify_passes():
    code, out = call("verify", "--n", "6")
    assert code == 0, out
    assert out.rstrip().endswith("checks passed")
    assert "[FAIL]" not in out


def test_verify_catches_mn_sign_error(monkeypatch):
    good = symrep.verify.mn_character

    def flipped(shape, rho):
        value = good(shape, rho)
        return -value if len(rho) == 2 else value

    monkeypatch.setattr(symrep.verify, "mn_character", flipped)
    code, out = call("verify", "--n", "4", "--suite", "characters")
    assert code == 3 and "[FAIL]" in out


def test_verify_catches_orthogonal_form_error(monkeypatch):
    monkeypatch.setattr(symrep.repforms, "sqrt", lambda x: math.sqrt(x) * 1.001)
    code, out = call("verify", "--n", "4", "--suite", "coxeter")
    assert code == 3 and "[FAIL] coxeter: orthogonal relations" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "symrep", "dim", "2,1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2\n"
