import pytest

from theta_forge.construct import ConstructionParams, audited, build_norm_set
from theta_forge.gf import make_field
from theta_forge.linrep import build_linear_representation

_cache = {}


def norm_graph(q, t):
    """Audited norm set and its incidence graph, cached across tests."""
    if (q, t) not in _cache:
        S = audited(build_norm_set(ConstructionParams(make_field(q), t)), self_check_below=0)
        _cache[q, t] = (S, build_linear_representation(S))
    return _cache[q, t]


@pytest.fixture(scope="session")
def g23():
    return norm_graph(3, 2)


@pytest.fixture(scope="session")
def g24():
    return norm_graph(4, 2)


@pytest.fixture(scope="session")
def g34():
    return norm_graph(4, 3)


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if "test_acceptance.py" in item.nodeid and item.name.startswith("test_criterion"):
        if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            if hasattr(item, "callspec"):
                doc += f" [{item.callspec.id}]"
            _acceptance.append((item.name, report.outcome, doc, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, doc, duration in _acceptance:
        tag = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{tag}] {doc} ({duration:.2f}s)")
