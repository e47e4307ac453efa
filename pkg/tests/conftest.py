import re


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One verdict line per acceptance criterion, after the normal summary."""
    rows = []
    for status, verdict in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(status, []):
            m = re.search(r"test_acceptance\.py::test_c(\d+)_(\w+)", rep.nodeid)
            if m:
                rows.append((int(m.group(1)), m.group(2), verdict))
    if not rows:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for num, name, verdict in sorted(rows):
        terminalreporter.write_line(f"  {num}. {name.replace('_', ' ')}: {verdict}")
