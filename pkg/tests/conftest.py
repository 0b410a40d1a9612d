import pytest

ACCEPTANCE_RESULTS: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    label = getattr(item.function, "acceptance_label", None)
    if label is None or report.when != "call":
        return
    ACCEPTANCE_RESULTS[label] = ("PASS" if report.passed else "FAIL", item.function.acceptance_title)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split("-")[1])):
        status, title = ACCEPTANCE_RESULTS[label]
        terminalreporter.write_line(f"[{status}] {label}: {title}")
