import functools

import pytest

from euler_klc.lcanalysis import klc_brute
from euler_klc.seqgen import gen_complement, gen_euler_threshold

ACCEPTANCE: list[tuple[str, bool, str]] = []

_MAKERS = {"euler": gen_euler_threshold, "euler-complement": gen_complement}


@functools.lru_cache(maxsize=None)
def brute_profile(family: str, p: int, r: int, k_max: int | None = None, workers: int = 4):
    """klc_brute results shared between test modules (the larger ones take
    tens of seconds)."""
    return klc_brute(_MAKERS[family](p, r), k_max, workers=workers)


@pytest.fixture
def record():
    def _record(label: str, ok: bool, detail: str = ""):
        ACCEPTANCE.append((label, ok, detail))
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
