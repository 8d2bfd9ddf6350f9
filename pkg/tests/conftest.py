from __future__ import annotations

import pytest


@pytest.fixture(autouse=True, scope="session")
def _isolated_cache(tmp_path_factory):
    """Keep the on-disk result cache out of the home directory during tests."""
    mp = pytest.MonkeyPatch()
    mp.setenv("OPSTAR_CACHE_DIR", str(tmp_path_factory.mktemp("opstar-cache")))
    yield
    mp.undo()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line[1])
