"""Shared hooks: collect the acceptance one-liners and print them at the
end of the run so they show up without -s."""

import pytest

acceptance_lines = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if (report.when == "call" and report.failed
            and "test_acceptance" in report.nodeid):
        name = item.name.removeprefix("test_")
        acceptance_lines.append(f"ACCEPTANCE {name}: FAIL")


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
