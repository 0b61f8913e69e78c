import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


def _cli_path():
    env = os.environ.get("SHTK_CLI")
    if env:
        return env
    candidate = ROOT / "build" / "shtk"
    if not candidate.exists():
        pytest.skip("shtk executable not built")
    return str(candidate)


@pytest.fixture(scope="session")
def run_cli():
    exe = _cli_path()

    def run(*args, expect=0):
        proc = subprocess.run([exe, *args], capture_output=True, text=True, check=False)
        assert proc.returncode == expect, proc.stderr
        return proc

    return run


@pytest.fixture(scope="session")
def schema():
    base = pathlib.Path(os.environ.get("SHTK_SCHEMAS", ROOT / "schemas"))

    def load(name):
        return json.loads((base / f"{name}.schema.json").read_text())

    return load
