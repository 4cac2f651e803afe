"""Rewrite every committed golden output from the current engine."""
from pathlib import Path

from dhmyerson.suites import golden_outputs

GOLDEN = Path(__file__).resolve().parent.parent / "golden"

for name, (text, code) in golden_outputs(GOLDEN).items():
    (GOLDEN / name).write_text(text, encoding="utf-8")
    print(f"{name} (exit {code})")
