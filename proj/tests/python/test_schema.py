"""CLI reports validate against docs/report.schema.json and are deterministic."""

import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
CLI = os.environ.get("MPBE_CLI", str(ROOT / "build" / "mpbe"))
FIXTURES = ROOT / "fixtures"
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)

NAMES = ["psbe4", "psbe5", "bc4", "inv6"]


def run(*args):
    proc = subprocess.run([CLI, *args, "--json"], capture_output=True, text=True)
    assert proc.returncode in (0, 1), proc.stderr
    return proc.returncode, proc.stdout


def commands():
    for name in NAMES:
        path = str(FIXTURES / f"{name}.alg")
        yield ["check", path]
        yield ["mop", path]
        yield ["ds", path]
        yield ["gen", path, "--set", "1"]
        yield ["verify", path]
        yield ["verify", path, "--conjectures"]
    psbe5 = str(FIXTURES / "psbe5.alg")
    bc4 = str(FIXTURES / "bc4.alg")
    yield ["ds", bc4, "--pair", "p1", "--pair", "p2", "--variant", "be"]
    yield ["mop", bc4, "--mode", "bc"]
    yield ["quotient", psbe5, "--set", "1,a,d", "--pair", "p4"]
    yield ["search", "--law", "C.psBCK6", "--max-size", "3"]
    yield ["search", "--law", "C.forall_isotone", "--forbid", "condition_T", "--max-size", "4"]
    yield ["search", "--law", "C.leq_reflexive", "--max-size", "3"]
    yield ["laws"]


@pytest.mark.parametrize("args", list(commands()), ids=lambda a: " ".join(pathlib.Path(x).name for x in a))
def test_report_matches_schema(args):
    code, out = run(*args)
    report = json.loads(out)
    VALIDATOR.validate(report)
    assert report["exit_status"] == code
    assert report["subcommand"] == args[0]


def test_reports_are_byte_identical():
    path = str(FIXTURES / "inv6.alg")
    assert run("verify", path)[1] == run("verify", path, "--threads", "4")[1]


def test_verify_exit_status():
    for name in NAMES:
        code, out = run("verify", str(FIXTURES / f"{name}.alg"))
        assert code == 0
        assert json.loads(out)["payload"]["summary"]["fails"] == 0


def test_gen_payload():
    _, out = run("gen", str(FIXTURES / "psbe5.alg"), "--set", "1,d")
    assert json.loads(out)["payload"]["generated"] == ["1", "a", "d"]
