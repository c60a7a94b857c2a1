import json
import os
import subprocess

import pytest

import ssg


def test_parse_and_format():
    system = ssg.parse_system("ring 7 grevlex x y\nx^2*y - 3")
    assert system.modulus == 7
    assert system.order == "grevlex"
    assert system.variables == ["x", "y"]
    assert system.generators == ["x^2*y + 4"]
    assert ssg.parse_system(system.text).generators == system.generators


def test_parse_error_is_value_error():
    with pytest.raises(ssg.ParseError, match=r"^1:6: "):
        ssg.parse_system("ring 4 grevlex x\nx")
    with pytest.raises(ValueError):
        ssg.parse_system("ring 7 grevlex x\ny")


def test_groebner_small():
    system = ssg.parse_system("ring 32003 grevlex x y\nx^2 - y\nx*y - 1")
    report = ssg.groebner(system, verify=True, certify=True, check_invariants=True)
    assert report.basis == ["y^2 + 32002*x", "x*y + 32002", "x^2 + 32002*y"]
    assert report.verdicts == {"gb_check": True, "ideal_equality": True, "certify": True}
    assert report.basis_text.splitlines()[0] == "ring 32003 grevlex x y"
    assert set(report.stats) == {
        "iterations", "pairs_generated", "pairs_pruned", "zero_reductions",
        "reduction_steps", "basis_size_raw", "basis_size_reduced", "wall_time",
    }
    assert report.stats["basis_size_reduced"] == 3


def test_engine_matches_buchberger_on_benchmarks():
    for family, n in [("cyclic", 3), ("cyclic", 4), ("katsura", 3)]:
        system = ssg.benchmark(family, n)
        ours = ssg.groebner(system)
        reference = ssg.groebner(system, algorithm="buchberger")
        assert ours.basis == reference.basis
        assert ssg.is_groebner_basis(system, ours.basis)
        assert ssg.verify(system, ours.basis) == {"gb_check": True, "ideal_equality": True}


def test_random_systems():
    for seed in range(20):
        system = ssg.random_system(seed, modulus=7, order="lex" if seed % 2 else "grevlex")
        assert ssg.groebner(system).basis == ssg.groebner(system, algorithm="buchberger").basis


def test_verify_detects_non_basis():
    system = ssg.parse_system("ring 32003 grevlex x y\nx^2 - y\nx*y - 1")
    assert ssg.verify(system, system.generators) == {"gb_check": False, "ideal_equality": True}
    assert not ssg.is_groebner_basis(system, system.generators)


def test_contract_errors():
    with pytest.raises(ssg.ContractError):
        ssg.benchmark("cyclic", 1)
    with pytest.raises(ValueError):
        ssg.groebner(ssg.benchmark("cyclic", 3), algorithm="f4")


def test_cli_in_process():
    code, out, err = ssg.cli(["gb", "--bench", "cyclic:3", "--verify"])
    assert code == 0
    assert out.startswith("ring 32003 grevlex x1 x2 x3\n")
    assert "gb-check: pass" in err
    code, _, err = ssg.cli(["gb", "/nonexistent/system.txt"])
    assert code == 1 and err.startswith("ssg: ")


@pytest.mark.skipif("SSG_CLI" not in os.environ, reason="command line binary not provided")
def test_cli_binary(tmp_path):
    stats = tmp_path / "stats.json"
    result = subprocess.run(
        [os.environ["SSG_CLI"], "gb", "--bench", "katsura:3", "--stats", str(stats)],
        capture_output=True, text=True, check=True,
    )
    assert result.stdout == ssg.groebner(ssg.benchmark("katsura", 3)).basis_text
    assert json.loads(stats.read_text())["basis_size_reduced"] >= 1
