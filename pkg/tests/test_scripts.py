import json
import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def run_script(name, *args):
    return subprocess.run(
        [sys.executable, str(SCRIPTS / name), *args],
        capture_output=True,
        text=True,
        timeout=600,
    )


def test_depth_power_sweep_small_grid():
    proc = run_script("depth_power_sweep.py", "--n-max", "2", "--t-max", "2")
    assert proc.returncode == 0
    assert "r2 d2" in proc.stdout and "r4 d2" in proc.stdout


def test_reproduce_results_writes_report(tmp_path):
    out = tmp_path / "report.json"
    proc = run_script("reproduce_results.py", "--out", str(out))
    assert proc.returncode == 0
    report = json.loads(out.read_text())
    assert report["failures"] == 0
    assert set(report["suites"]) == {"paper", "properties"}
    statuses = {c["status"] for cases in report["suites"].values() for c in cases}
    assert statuses <= {"pass", "skipped-long"}
