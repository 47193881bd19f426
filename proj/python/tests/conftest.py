import json
import os
import subprocess
from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parents[2]

DIPLOMA_FORMAT = {
    "format_id": "diploma-v1",
    "fields": [
        {"name": "university", "type": "text"},
        {"name": "degree", "type": "text"},
        {"name": "gpa", "type": "int", "range_hint": {"lo": 30, "hi": 45, "bits": 8}},
        {"name": "domain", "type": "text"},
    ],
}

LICENCE_FORMAT = {
    "format_id": "licence-v1",
    "fields": [
        {"name": "validity", "type": "int"},
        {"name": "category", "type": "text"},
    ],
}

DIPLOMA_VALUES = {
    "university": "Unv.Economics",
    "degree": "Economics",
    "gpa": 38,
    "domain": "Management",
}


@pytest.fixture(scope="session")
def cli():
    path = Path(os.environ.get("SDCRED_CLI", REPO / "build" / "sdcred"))
    if not path.exists():
        pytest.skip("CLI not built; run cmake and set SDCRED_CLI or build/sdcred")
    return str(path)


class CliRunner:
    def __init__(self, cli, cwd, registry):
        self.cli = cli
        self.cwd = cwd
        self.env = dict(os.environ, SD_REGISTRY_PATH=str(registry))

    def run(self, *args, expect=0):
        proc = subprocess.run(
            [self.cli, *map(str, args)],
            cwd=self.cwd,
            env=self.env,
            capture_output=True,
            text=True,
        )
        assert proc.returncode == expect, (
            f"{args} exited {proc.returncode}, wanted {expect}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
        return proc

    def write_json(self, name, obj):
        path = Path(self.cwd) / name
        path.write_text(json.dumps(obj))
        return str(path)


@pytest.fixture
def runner(cli, tmp_path):
    return CliRunner(cli, tmp_path, tmp_path / "registry.jsonl")
