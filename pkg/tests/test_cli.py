import subprocess
import sys

import pytest

from qhall import cli
from qhall.literal import LiteralError, parse_poly
from qhall.modlf import synthetic_exterior_ideal
from qhall.twist import CheckResult, Report


def run(argv, capsys):
    status = cli.main(argv)
    out = capsys.readouterr()
    return status, out.out, out.err


def test_coha_mul_example(capsys):
    status, out, _ = run(["coha-mul", "--loops", "0", "1@1", "x@1"], capsys)
    assert status == 0
    assert out == "1 @2\n"


def test_kha_mul_and_records(capsys):
    status, out, _ = run(["kha-mul", "--loops", "1", "1@1", "1@1", "--format", "records"], capsys)
    assert status == 0
    assert out == "command=kha-mul grade=2 result=2\n"


def test_chern_of_one(capsys):
    status, out, _ = run(["chern", "--order", "4", "1"], capsys)
    assert status == 0
    assert out.startswith("1 @0")


def test_star_on_two_vertices(capsys):
    status, out, _ = run(["coha-star", "--arrows", "0,1;1,0", "1@1,0", "1@0,1"], capsys)
    assert status == 0
    assert out.strip().endswith("@1,1")


def test_twist_verify_passes(capsys):
    status, out, _ = run(["twist-verify", "--loops", "2", "--grades", "1", "--order", "4"], capsys)
    assert status == 0
    assert "FAIL" not in out
    assert out.strip().splitlines()[-1].startswith("#")


def test_twist_verify_failure_status(monkeypatch, capsys):
    bad = Report("forced", 0, [CheckResult("forced check", False, "witness")])
    monkeypatch.setattr(cli, "verification_suite", lambda *a, **k: bad)
    status, out, _ = run(["twist-verify", "--loops", "0"], capsys)
    assert status == 4
    assert "FAIL" in out


def test_module_act(tmp_path, capsys):
    path = tmp_path / "ideal.json"
    path.write_text(synthetic_exterior_ideal().dumps())
    status, out, _ = run(["module-act", "--loops", "0", "--ideal", str(path), "1@1", "x@1"], capsys)
    assert status == 0
    assert out == "1 @2\n"


def test_prim_dims(capsys):
    status, out, _ = run(["prim-dims", "--loops", "0", "--grades", "2", "--lmax", "3"], capsys)
    assert status == 0
    assert "gamma=1 l=1 dim=1" in out
    assert "gamma=1 l=3 dim=1" in out


def test_parse_error_reports_position(capsys):
    status, _, err = run(["coha-mul", "--loops", "0", "1@1", "x^@1"], capsys)
    assert status == 2
    assert "line 1, column 3" in err


def test_bad_quiver_is_a_parse_error(capsys):
    status, _, _ = run(["coha-mul", "--arrows", "0,a", "1", "1"], capsys)
    assert status == 2


def test_nonsymmetric_quiver_names_the_pair(capsys):
    status, _, err = run(["coha-star", "--arrows", "0,1;0,0", "1@1,0", "1@0,1"], capsys)
    assert status == 3
    assert "(0,1)" in err


def test_nonsymmetric_operand_is_a_precondition_error(capsys):
    status, _, _ = run(["coha-mul", "--loops", "0", "1@1", "x@2"], capsys)
    assert status == 3


def test_resource_limit(capsys):
    status, _, _ = run(["prim-dims", "--loops", "1", "--grades", "9"], capsys)
    assert status == 5


def test_exit_statuses_documented():
    text = cli.build_parser().format_help()
    for code in ("0", "2", "3", "4", "5"):
        assert f"  {code}  " in text


@pytest.mark.parametrize("command", ["coha-mul", "coha-star", "kha-mul", "chern", "twist-verify", "module-act",
                                     "prim-dims"])
def test_subcommand_help_renders(command, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main([command, "--help"])
    assert exc.value.code == 0
    assert "exit statuses" in capsys.readouterr().out


def test_literal_errors():
    with pytest.raises(LiteralError) as exc:
        parse_poly("1 +\n 2*y")
    assert (exc.value.line, exc.value.column) == (2, 4)
    with pytest.raises(LiteralError):
        parse_poly("x[0,3]@2")
    with pytest.raises(LiteralError):
        parse_poly("x^-1")
    with pytest.raises(LiteralError):
        parse_poly("x + z")


def test_literal_roundtrip():
    p, g = parse_poly("3*x[0,1]^2 - 1/2*x[1,1] + 4@1,1", n_vertices=2)
    assert g == (1, 1)
    assert parse_poly(p.to_str() + "@1,1", n_vertices=2)[0] == p


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "qhall.cli", "twist-verify", "--loops", "0", "--grades", "1", "--order", "4",
            "--seed", "7", "--format", "records"]
    outs = {subprocess.run(argv, capture_output=True, text=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1
