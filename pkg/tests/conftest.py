import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LOG
    if ACCEPTANCE_LOG:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
