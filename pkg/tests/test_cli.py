import json
import subprocess
import sys

import pytest

from stonedual.cli import Command, main, run

FC = {"kind": "fc", "universe": "nat"}
FS_PAIR = json.dumps({"algebra": FC, "ideal": {"kind": "finite-support", "block": 0}})
K_OMEGA = json.dumps({"blocks": [{"kind": "k-omega"}]})
OMEGA = json.dumps({"blocks": [{"kind": "discrete-omega"}]})


def cli(*argv):
    return main(list(argv))


def test_zlba_check_on_finite_support(capsys):
    assert cli("check", "--law", "zlba", "--json", FS_PAIR) == 1
    out = capsys.readouterr().out
    assert "FAIL zlba" in out and "finite subsets of even" in out


def test_lba_check_on_finite_support(capsys):
    assert cli("check", "--law", "lba", "--json", FS_PAIR) == 0


def test_theta_t_of_k_omega(capsys):
    assert cli("dual", "--functor", "theta-t", "--json", K_OMEGA) == 0
    out = capsys.readouterr().out
    assert "FC(nat)" in out and "Full" in out


def test_theta_t_json_output(capsys):
    assert cli("dual", "--functor", "theta-t", "--json", K_OMEGA, "--format", "json") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["functor"] == "theta-t"
    assert doc["result"]["ideal"] == {"kind": "full"}


def test_unrepresentable_input_exits_2(capsys):
    assert cli("dual", "--functor", "theta-t", "--json", OMEGA) == 2
    assert "UnrepresentableCO" in capsys.readouterr().out


def test_roundtrip_pair_E_on_catalog(capsys):
    assert cli("roundtrip", "--pair", "E") == 0
    assert "0 failures" in capsys.readouterr().out


@pytest.mark.parametrize("pair", ["Fp", "theta", "json"])
def test_other_roundtrip_pairs(pair, capsys):
    assert cli("roundtrip", "--pair", pair) == 0


def test_catalog_lists_sections(capsys):
    assert cli("catalog") == 0
    out = capsys.readouterr().out
    for word in ("algebras", "dz", "lba", "spaces"):
        assert word in out
    assert cli("catalog", "--format", "json") == 0
    lines = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert {l["section"] for l in lines} >= {"algebras", "spaces"}


def test_validation_error_exits_2(capsys):
    assert cli("validate", "--json", '{"kind":"finite","atoms":["p","p"]}', "--format", "json") == 2
    doc = json.loads(capsys.readouterr().out)
    assert doc["error"] == "ValidationError" and doc["which"]


def test_parse_error_reports_position(capsys):
    assert cli("validate", "--json", '{"kind": }', "--format", "json") == 2
    doc = json.loads(capsys.readouterr().out)
    assert doc["error"] == "ParseError" and doc["line"] == 1 and doc["column"] == 10


def test_validate_dz_levels(capsys):
    principals = json.dumps({"algebra": FC, "points": {"blocks": [{"mode": "cofinite", "set": [], "free": False}]}})
    assert cli("validate", "--json", principals, "--format", "json") == 1
    recs = {r["law"]: r for r in map(json.loads, capsys.readouterr().out.splitlines())}
    assert recs["z"]["pass"] and not recs["dz"]["pass"]


def test_usage_errors_exit_2():
    assert run(Command("dual", text=K_OMEGA))[0] == 2
    assert run(Command("check"))[0] == 2
    assert run(Command("roundtrip"))[0] == 2
    # E needs an ldz input, a bare space is the wrong kind of object
    assert run(Command("dual", functor="E", text=K_OMEGA))[0] == 2


@pytest.mark.parametrize("cmd", [
    Command("check", law="zlba", text=FS_PAIR),
    Command("check", law="lba", text=FS_PAIR),
    Command("dual", functor="theta-t", text=OMEGA),
    Command("dual", functor="theta-t", text=K_OMEGA),
    Command("check", law="tarski", n_random=5),
])
def test_exit_status_independent_of_format(cmd):
    human = run(cmd)[0]
    cmd.fmt = "json"
    assert run(cmd)[0] == human


def test_suite_reports_are_jsonl(capsys):
    assert cli("check", "--law", "fc-functors", "--n-random", "5", "--seed", "3", "--format", "json") == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines and all(set(json.loads(l)) == {"law", "case", "pass", "witness"} for l in lines)


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "stonedual", "check", "--law", "zlba", "--json", FS_PAIR],
                       capture_output=True, text=True)
    assert p.returncode == 1 and "even" in p.stdout
