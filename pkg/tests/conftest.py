import pytest

_TITLES: dict[int, str] = {}
_FAILED: dict[int, list[str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    report = (yield).get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when == "teardown":
        return
    number, title = marker.args
    _TITLES[number] = title
    failures = _FAILED.setdefault(number, [])
    if hasattr(report, "wasxfail"):
        failures.append(f"{item.name} (expected failure)")
    elif report.failed:
        failures.append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _TITLES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_TITLES):
        failed = _FAILED[number]
        line = f"criterion {number:2d} {'FAIL' if failed else 'PASS'}: {_TITLES[number]}"
        if failed:
            line += f" [{', '.join(failed)}]"
        terminalreporter.write_line(line)
