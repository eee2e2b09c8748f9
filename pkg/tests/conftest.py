import json
import sys
from pathlib import Path

import pytest

from oracles import FROZEN

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


@pytest.fixture(scope="session")
def frozen():
    return json.loads(FROZEN.read_text(encoding="utf-8"))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(mod.RESULTS.values()):
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
