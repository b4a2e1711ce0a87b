from pathlib import Path

import numpy as np
import pytest

from dpkmeans import Dataset, load_csv

DATA_DIR = Path(__file__).resolve().parents[1] / "data"
HAYES_ROTH_PATH = DATA_DIR / "hayes_roth.csv"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def iris() -> Dataset:
    return load_csv(DATA_DIR / "iris.csv", label_column="class")


@pytest.fixture(scope="session")
def wine() -> Dataset:
    return load_csv(DATA_DIR / "wine.csv", label_column="class")


def twenty_point_layout() -> np.ndarray:
    """Two tight 2-D blobs plus three isolated outliers, 20 points total.

    Blob cores sit at 1-based positions 1 and 10, outliers at 4, 13, 15, so
    the decision graph shows two high-rho/high-delta marks and three
    low-rho/high-delta ones.
    """
    pts = np.zeros((20, 2))
    pts[0] = (1.0, 1.0)
    for j, idx in enumerate([1, 2, 4, 5, 6, 7, 8]):
        ang = 2 * np.pi * j / 7
        pts[idx] = (1.0 + 0.2 * np.cos(ang), 1.0 + 0.2 * np.sin(ang))
    pts[9] = (5.0, 5.0)
    for j, idx in enumerate([10, 11, 13, 15, 16, 17, 18, 19]):
        ang = 2 * np.pi * (j + 0.5) / 8
        pts[idx] = (5.0 + 0.2 * np.cos(ang), 5.0 + 0.2 * np.sin(ang))
    pts[3] = (9.0, 1.0)
    pts[12] = (1.0, 9.0)
    pts[14] = (9.0, 9.0)
    return pts


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL/SKIP line per acceptance criterion at the end of the run."""
    lines = []
    for outcome in ("passed", "failed", "skipped"):
        for report in terminalreporter.stats.get(outcome, []):
            if "acceptance" in report.keywords and report.when in ("call", "setup"):
                reason = ""
                if outcome == "skipped":
                    reason = f"  ({report.longrepr[2] if report.longrepr else ''})"
                lines.append(f"{outcome.upper():<8}{report.nodeid}{reason}")
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
