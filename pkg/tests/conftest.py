import pytest

from catalan_sset.catalan import build_catalan_direct, build_nerve_monoidal_poset, two_poset


@pytest.fixture(scope="session")
def C4():
    return build_catalan_direct(4)


@pytest.fixture(scope="session")
def C2():
    return build_catalan_direct(2)


@pytest.fixture(scope="session")
def N4():
    return build_nerve_monoidal_poset(two_poset(), 4)


_CRITERIA: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args
    _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL", report.duration)
    print(f"\ncriterion {number} ({title}): {'PASS' if report.passed else 'FAIL'} in {report.duration:.1f}s")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, verdict, duration = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {verdict:<4}  {duration:7.1f}s  {title}")
