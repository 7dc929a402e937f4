import pytest

from quran_phonetics.corpus import bundled_uthmani
from quran_phonetics.moshaf import reference_attributes


@pytest.fixture(scope="session")
def corpus():
    return bundled_uthmani()


@pytest.fixture(scope="session")
def attrs():
    return reference_attributes()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS, key=str):
        terminalreporter.write_line(mod.RESULTS[key])
