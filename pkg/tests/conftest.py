import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# Filled by tests/test_acceptance.py: criterion id -> (passed, description)
ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split("-")[1])):
        passed, text = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {key}  {text}")
