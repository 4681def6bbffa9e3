"""Regenerate the CLI golden files: python3 tests/fixtures/regenerate.py"""
from __future__ import annotations

import contextlib
import io
import json
import os
from pathlib import Path

from clustermorph.cli import run

HERE = Path(__file__).resolve().parent
CASES = HERE / "cli_cases.json"
GOLDEN = HERE / "golden"
QUIVERS = HERE / "quivers"


def load_cases() -> list[tuple[str, list[str]]]:
    return [(name, argv) for name, argv in json.loads(CASES.read_text())]


def produce(argv: list[str]) -> str:
    """Exit code, stdout and stderr of one invocation, run from the quiver directory."""
    out, err = io.StringIO(), io.StringIO()
    cwd = os.getcwd()
    os.chdir(QUIVERS)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            try:
                code = run(argv, out, err)
            except SystemExit as exc:
                code = exc.code
    finally:
        os.chdir(cwd)
    return f"exit: {code}\n--- stdout\n{out.getvalue()}--- stderr\n{err.getvalue()}"


def main() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in load_cases():
        (GOLDEN / f"{name}.txt").write_text(produce(argv))
        print(name)


if __name__ == "__main__":
    main()
