"""Shared fixtures: the machine corpus on disk and an in-process CLI."""

from __future__ import annotations

import io
import pathlib

import pytest

from quadtm.cli import main as cli_main

MACHINES = pathlib.Path(__file__).parent / "machines"


def machine_text(name: str) -> str:
    return (MACHINES / (name + ".tm")).read_text()


def machine_path(name: str) -> str:
    return str(MACHINES / (name + ".tm"))


def all_bitstrings(max_len: int, min_len: int = 0):
    """Every 0/1 string with min_len <= length <= max_len, shortest first."""
    for n in range(min_len, max_len + 1):
        if n == 0:
            yield ""
            continue
        for v in range(1 << n):
            yield format(v, "0%db" % n)


@pytest.fixture
def run_cli(monkeypatch, capsys):
    """Invoke the command line in-process: run_cli(args, stdin=...) ->
    (exit_code, stdout, stderr)."""

    def invoke(args, stdin: str = ""):
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
        try:
            rc = cli_main(list(args))
        except SystemExit as exc:  # argparse usage failures
            rc = exc.code if exc.code is not None else 0
        captured = capsys.readouterr()
        return rc, captured.out, captured.err

    return invoke
