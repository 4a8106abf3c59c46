import subprocess
import sys

import pytest

SCENARIOS = ("depolarizing", "qa-double", "qa-half", "re02-extremal", "re23-extremal")


@pytest.fixture(scope="session")
def sweep_csvs(tmp_path_factory):
    """Sweep CSVs for all five scenarios, produced through the public CLI."""
    base = tmp_path_factory.mktemp("sweeps")
    paths = {}
    for scenario in SCENARIOS:
        out = base / f"{scenario}.csv"
        subprocess.run(
            [sys.executable, "-m", "qkdbound.cli", "sweep",
             "--scenario", scenario,
             "--alpha-sq", "0.2", "--alpha-sq", "0.5", "--alpha-sq", "0.8",
             "--q-min", "0", "--q-max", "0.125", "--steps", "26",
             "--include-bb84", "--out", str(out)],
            check=True,
        )
        paths[scenario] = out
    return paths
