import sys
from functools import lru_cache

from hopffrob.builders import preset
from hopffrob.hopffrobenius import build_hf

# every example algebra the property tests sweep over
EXAMPLES = [
    "trivial",
    "cyclic:2",
    "cyclic:3",
    "cyclic:5",
    "sym:3",
    "dihedral:4",
    "taft:2",
    "taft:3",
    "taft:4",
    "dual:sym:3",
    "dual:taft:3",
]


@lru_cache(maxsize=None)
def algebra(name):
    return preset(name)


@lru_cache(maxsize=None)
def hf_of(name):
    return build_hf(algebra(name))


@lru_cache(maxsize=None)
def classical_qt(name):
    from hopffrob.doubles import drinfeld_qt

    return drinfeld_qt(algebra(name))


@lru_cache(maxsize=None)
def red_qt_of(name):
    from hopffrob.doubles import red_qt

    return red_qt(hf_of(name))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    RESULTS = getattr(module, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, title = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")
