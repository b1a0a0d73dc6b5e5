"""Shared fixtures: the acceptance grid is built once per session."""

from fractions import Fraction

import pytest

from mmmkit import build_gadget, generate_yes

GRID_COLORS = range(2, 7)
GRID_VARS = range(3, 13)
GRID_EPSILONS = (Fraction(1, 4), Fraction(1, 8))
GRID_XIS = (Fraction(0), Fraction(1, 4))
GRID_SEEDS = range(5)


def grid_keys():
    for m in GRID_COLORS:
        for n in GRID_VARS:
            for eps in GRID_EPSILONS:
                for xi in GRID_XIS:
                    for seed in GRID_SEEDS:
                        yield (m, n, eps, xi, seed)


@pytest.fixture(scope="session")
def grid_gadgets():
    """Every (colors, vars, epsilon, xi, seed) gadget of the sweep, built once."""
    out = {}
    for m, n, eps, xi, seed in grid_keys():
        instance = generate_yes(n, m, xi=xi, topology="cycle", seed=seed)
        out[(m, n, eps, xi, seed)] = build_gadget(instance, eps)
    return out


CRITERION_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def criterion():
    """Recorder for the acceptance suite: one summary line per criterion."""

    def record(number: int, ok: bool, detail: str) -> bool:
        verdict = "PASS" if ok else "FAIL"
        CRITERION_LINES[number] = f"criterion {number:2d}: {verdict}  {detail}"
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERION_LINES):
        terminalreporter.write_line(CRITERION_LINES[number])
