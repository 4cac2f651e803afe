"""Committed golden outputs must be reproduced byte for byte."""
import os
import subprocess
import sys

import pytest

from conftest import GOLDEN, ROOT
from dhmyerson.suites import golden_outputs


@pytest.fixture(scope="module")
def produced():
    return golden_outputs(GOLDEN)


def test_all_golden_files_reproduce(produced):
    for name, (text, _) in produced.items():
        committed = (GOLDEN / name).read_bytes()
        assert text.encode() == committed, name


def test_golden_same_on_python_backend(produced):
    env = dict(os.environ, DHMYERSON_PURE_PYTHON="1")
    code = (
        "import sys, json; from dhmyerson import kernels; from dhmyerson.suites import golden_outputs;"
        "assert kernels.BACKEND == 'python';"
        f"out = golden_outputs({str(GOLDEN)!r});"
        "json.dump({k: v[0] for k, v in out.items()}, sys.stdout)"
    )
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, cwd=ROOT)
    assert res.returncode == 0, res.stderr
    import json

    other = json.loads(res.stdout)
    for name, (text, _) in produced.items():
        assert other[name] == text, name
