import sys
from pathlib import Path

# Make sibling fixture modules (paper_tables) importable regardless of cwd.
sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, ()):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" not in nodeid or "::" not in nodeid:
                continue
            name = nodeid.split("::")[-1]
            lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(lines):
        terminalreporter.write_line(f"{status}  {name}")
