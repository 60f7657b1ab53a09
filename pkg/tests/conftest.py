def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion test."""
    lines = []
    for status in ("passed", "failed"):
        for rep in terminalreporter.stats.get(status, []):
            if getattr(rep, "when", None) == "call" and "test_acceptance.py" in rep.nodeid:
                lines.append((rep.nodeid.split("::", 1)[1], status.upper()))
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for name, status in sorted(lines):
            terminalreporter.write_line(f"{name}: {status}")
