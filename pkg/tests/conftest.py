from __future__ import annotations

import numpy as np
import pytest

from localfrac._backend import available_kernels

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record(criterion: str, ok: bool, detail: str) -> None:
    prev = ACCEPTANCE.get(criterion)
    ok_all = ok and (prev[0] if prev else True)
    details = f"{prev[1]}; {detail}" if prev else detail
    ACCEPTANCE[criterion] = (ok_all, details)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(20260414)


@pytest.fixture(params=sorted(available_kernels()))
def kern(request):
    return available_kernels()[request.param]
