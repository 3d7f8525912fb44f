from hypothesis import settings

# exact arithmetic has heavy-tailed timings; keep runs reproducible
settings.register_profile("repo", deadline=None, derandomize=True, max_examples=60)
settings.load_profile("repo")

import pytest

_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
