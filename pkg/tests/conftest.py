import json
from pathlib import Path

from hypothesis import strategies as st

from macq.complexes import SimplicialComplex

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / f"{name}.json")


def load_fixture(name: str) -> SimplicialComplex:
    return SimplicialComplex.from_dict(json.loads((FIXTURES / f"{name}.json").read_text()))


@st.composite
def complexes(draw, min_m=1, max_m=5):
    """Random complexes: a few random subsets of [m] taken as facets."""
    m = draw(st.integers(min_m, max_m))
    masks = draw(st.lists(st.integers(0, (1 << m) - 1), max_size=m + 1))
    facets = [[v + 1 for v in range(m) if mask >> v & 1] for mask in masks]
    return SimplicialComplex(m, facets)


@st.composite
def complex_and_vertex(draw, max_m=5):
    K = draw(complexes(max_m=max_m))
    v = draw(st.integers(1, K.ambient))
    return K, v


# ------------------------------------------------ acceptance criterion report

_outcomes: dict = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    ok = call.excinfo is None
    prev = _outcomes.get(number, (title, True))
    _outcomes[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        title, ok = _outcomes[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
