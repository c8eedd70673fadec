import random

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=0, help="seed for sampled checks")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
