#!/usr/bin/env python3
"""
Test Command Line Interface
Subcommand artifacts, exit codes and the cache switch
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from cmdef_lab.cli import EXIT_INPUT, EXIT_OK, EXIT_PARTIAL, build_parser, run
from cmdef_lab.config import settings
from cmdef_lab.groebner import Ideal
from cmdef_lab.models import Command, JobSpec
from cmdef_lab.poly_core import make_variables, parse_ideal_text


def cli(*args):
    return run(["--no-cache", *[str(a) for a in args]])


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_gb_of_empty_ideal(tmp_path, capsys):
    """A header-only ideal file gives a header-only basis"""
    ideal = write(tmp_path, "empty.txt", "ring QQ[x,y]\n")
    assert cli("gb", ideal) == EXIT_OK
    assert capsys.readouterr().out == "ring QQ[x,y] weights [1,1]\n"


@pytest.mark.parametrize("order", ["lex", "grevlex", "graded_lex"])
def test_gb_of_twisted_cubic(tmp_path, capsys, order):
    ideal = write(tmp_path, "cubic.txt", "# twisted cubic\nring QQ[x,y,z]\ny - x^2\nz - x^3\n")
    assert cli("--order", order, "gb", ideal) == EXIT_OK
    ring, basis = parse_ideal_text(capsys.readouterr().out)
    v = make_variables(ring)
    assert Ideal(ring, basis).equals(Ideal(ring, [v["y"] - v["x"] ** 2, v["z"] - v["x"] ** 3]))


def test_relideal_writes_tag_comments(tmp_path):
    generators = write(tmp_path, "cusp.txt", "ring QQ[X]\nX^2\nX^3\n")
    out = tmp_path / "relations.txt"
    assert cli("-o", out, "relideal", generators) == EXIT_OK
    text = out.read_text(encoding="utf-8")
    assert text.splitlines()[:2] == ["# T1 = X^2", "# T2 = X^3"]
    ring, relations = parse_ideal_text(text)
    t = make_variables(ring)
    assert ring.weights == (2, 3)
    assert Ideal(ring, relations).equals(Ideal(ring, [t["T2"] ** 2 - t["T1"] ** 3]))


def test_member(tmp_path, capsys):
    generators = write(tmp_path, "gens.txt", "ring QQ[X,Y]\nX^2\nY^2\nX*Y\n")
    assert cli("member", generators, "X^2*Y^2 + X*Y") == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "member = yes"
    assert lines[1].startswith("witness = ")
    assert "T1 = X^2" in lines
    assert cli("member", generators, "X") == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "member = no"


def test_hsop(capsys):
    assert cli("hsop", 3) == EXIT_OK
    assert capsys.readouterr().out == "hsop n=3: certified\n"
    assert cli("hsop", 3, "--squared") == EXIT_OK
    assert capsys.readouterr().out == "hsop n=3 squared: certified\n"
    assert cli("hsop", 1) == EXIT_INPUT


def test_scanreg_reports_one_based_positions(tmp_path, capsys):
    ring = write(tmp_path, "ring.txt", "ring QQ[x,y,z]\nx*y\n")
    sequence = write(tmp_path, "sequence.txt", "ring QQ[x,y,z]\nx\ny\nx + y\nz\n")
    assert cli("scanreg", ring, sequence) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[:2] == ["regular length = 2", "accepted positions = 3 4"]
    assert lines[2:] == ["x + y", "z"]


def test_frobinv_header(capsys):
    assert cli("frobinv", 2, 1) == EXIT_OK
    captured = capsys.readouterr()
    lines = captured.out.splitlines()
    assert lines[0] == "# ga(2,1): 3 generators"
    assert lines[1] == "# published count: unknown"
    ring, generators = parse_ideal_text(captured.out)
    assert ring.variables == ("X0", "Y0", "X1", "Y1")
    assert len(generators) == 3
    assert "ga(2,1)" in captured.err


def test_cmdef_then_verify(tmp_path, capsys):
    certificate = tmp_path / "ga_2_1.cert"
    assert cli("-o", certificate, "cmdef", 2, 1) == EXIT_OK
    assert "cmdef = 0" in certificate.read_text(encoding="utf-8").splitlines()
    assert cli("verify", certificate) == EXIT_OK
    assert capsys.readouterr().out == "verify = ok\n"

    tampered = write(tmp_path, "tampered.cert", certificate.read_text(encoding="utf-8").replace("depth >= 3", "depth >= 2"))
    assert cli("verify", tampered) == EXIT_INPUT


def test_budget_exit_code(tmp_path):
    certificate = tmp_path / "partial.cert"
    assert cli("--time-budget", "1e-9", "-o", certificate, "cmdef", 2, 1) == EXIT_PARTIAL
    assert "status = partial" in certificate.read_text(encoding="utf-8")


def test_input_errors(tmp_path):
    bad = write(tmp_path, "bad.txt", "ring F4[x]\nx\n")
    assert cli("gb", bad) == EXIT_INPUT
    assert cli("gb", tmp_path / "missing.txt") == EXIT_INPUT
    assert cli("cmdef", 4, 1) == EXIT_INPUT
    assert cli("cmdef", 2, 1, "sl2") == EXIT_INPUT
    assert cli("frobinv", 2, 0) == EXIT_INPUT
    assert cli("--time-budget", "-1", "hsop", 3) == EXIT_INPUT
    with pytest.raises(SystemExit) as exc:
        run(["--version"])
    assert exc.value.code == 0


def test_no_cache_switch(tmp_path, monkeypatch):
    """Without --no-cache the basis lands in the cache directory"""
    ideal = write(tmp_path, "cubic.txt", "ring QQ[x,y,z]\ny - x^2\nz - x^3\n")
    cache = tmp_path / "cache"
    monkeypatch.setattr(settings, "cache_dir", cache)
    monkeypatch.setattr(settings, "use_cache", True)
    assert cli("gb", ideal) == EXIT_OK
    assert not list(cache.glob("*.gb"))
    assert run(["gb", str(ideal)]) == EXIT_OK
    assert len(list(cache.glob("*.gb"))) == 1


def test_job_spec_validation():
    args = build_parser().parse_args(["cmdef", "3", "2", "sl2", "--homogenize"])
    assert (args.p, args.k, args.group, args.homogenize) == (3, 2, "sl2", True)
    job = JobSpec(command=Command.MEMBER, inputs=["gens.txt"], polynomial="X")
    assert job.inputs[0].name == "gens.txt"
    with pytest.raises(ValueError):
        JobSpec(command=Command.MEMBER, inputs=["gens.txt"])
    with pytest.raises(ValueError):
        JobSpec(command=Command.SCANREG, inputs=["ring.txt"])
    with pytest.raises(ValueError):
        JobSpec(command=Command.GB, inputs=["a.txt"], order="block_elimination")


if __name__ == "__main__":
    print("🚀 Running CLI tests")
    print("=" * 60)
    sys.exit(pytest.main([__file__, "-v"]))
