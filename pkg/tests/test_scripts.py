import json
import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def test_desk_verification_small_grid(tmp_path):
    out = tmp_path / "grid.jsonl"
    res = subprocess.run(
        [sys.executable, str(SCRIPTS / "desk_verification.py"), "--max-s", "3", "--max-M", "1",
         "--max-N", "2", "--m-max", "5", "--out", str(out)],
        capture_output=True, text=True, check=True,
    )
    summary = json.loads(res.stdout.strip().splitlines()[-1])
    assert summary["tuples"] == 6
    assert summary["status"] == {"TheoremConfirmed": 6}
    assert len(out.read_text().splitlines()) == 6


def test_pole_diagnostics_small_grid():
    res = subprocess.run(
        [sys.executable, str(SCRIPTS / "pole_diagnostics.py"), "--max-s", "2", "--max-MN", "1", "--m-max", "4"],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout.strip().endswith("3/3 non-proportional rows certified by a one-sided pole")
