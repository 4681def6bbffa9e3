import importlib.util
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from clustermorph.cli import run

FIXTURES = Path(__file__).parent / "fixtures"
_spec = importlib.util.spec_from_file_location("regenerate", FIXTURES / "regenerate.py")
regenerate = importlib.util.module_from_spec(_spec)
_spec.loader.exec_module(regenerate)
CASES = regenerate.load_cases()


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def quiver(name):
    return FIXTURES / "quivers" / f"quiver_{name}.json"


@pytest.mark.parametrize("name,argv", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv):
    assert regenerate.produce(argv) == (FIXTURES / "golden" / f"{name}.txt").read_text()


def test_every_golden_file_has_a_case():
    assert {p.stem for p in (FIXTURES / "golden").glob("*.txt")} == {name for name, _ in CASES}


def test_every_subcommand_is_covered():
    from clustermorph.cli import COMMANDS
    assert {argv[0] for _, argv in CASES if argv} >= set(COMMANDS)


def test_roots_and_theta_examples():
    code, out, _ = call("roots", quiver("a2"))
    assert code == 0 and len(json.loads(out)) == 3
    code, out, _ = call("theta", quiver("a3"), "--seq", "[[0,0,-1],[0,1,0],[1,0,0]]")
    assert json.loads(out) == [[-1, -1, -1], [1, 1, 0], [1, 0, 0]]


def test_torus_homology():
    code, out, _ = call("homology", quiver("a1a1"))
    data = json.loads(out)
    assert (data["H0"], data["H1"], data["H2"]) == ("Z", "Z^2", "Z")


def test_builtin_names():
    assert call("roots", "G2")[1].count("[") == 7


def test_domain_error_is_json():
    code, out, err = call("mutate", quiver("a2"), "--cluster", "[[1,0],[1,1]]", "--at", "[0,1]")
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "DomainError"


def test_rationals_round_trip():
    code, out, _ = call("stability", quiver("a3"), "--gamma", "[1,1,1]", "--v", '[0, "-1/2", 1]')
    assert json.loads(out)["value"] == [1, 2]


def test_console_script_usage_error():
    proc = subprocess.run([sys.executable, "-m", "clustermorph", "roots"], capture_output=True, text=True)
    assert proc.returncode == 2 and "usage" in proc.stderr


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "clustermorph", "clusters", "A2", "--size", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and len(json.loads(proc.stdout)) == 5
