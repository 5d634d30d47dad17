from __future__ import annotations

import pytest

from dissoc import _kernels
from dissoc._kernels import _pykernels

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture(params=["compiled", "python"])
def kernel(request, monkeypatch):
    """Run a test once per kernel implementation."""
    if request.param == "python":
        monkeypatch.setattr(_kernels, "dp_tables", _pykernels.dp_tables)
        monkeypatch.setattr(_kernels, "mds_search", _pykernels.mds_search)
    elif _kernels.IMPLEMENTATION != "cython":
        pytest.skip("compiled kernels not built")
    return request.param


@pytest.fixture
def record_criterion():
    def record(name: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE[name] = (passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split(":")[0][1:])):
        passed, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
