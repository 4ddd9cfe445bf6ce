"""Shared test plumbing: collects acceptance-criterion outcomes and prints
one line per criterion at the end of the run."""

ACCEPTANCE_RESULTS = []


def record_criterion(num, description, ok):
    """Log a criterion outcome (before any assert fires) and return it."""
    ACCEPTANCE_RESULTS.append((num, description, bool(ok)))
    return bool(ok)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num, description, ok in sorted(ACCEPTANCE_RESULTS):
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"C{num:02d} {verdict} — {description}")
