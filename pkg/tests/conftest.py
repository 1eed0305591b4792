import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}  ({detail})")
