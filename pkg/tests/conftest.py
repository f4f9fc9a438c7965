import re

import pytest

from lsi.lexicon import bundled_path, default_lexicon
from lsi.script import Script, load_social
from lsi.semantics import Perspective
from lsi.speechact import instantiate_act


def norm(text: str) -> str:
    return re.sub(r"[.?!]+$", "", text.strip()).lower()


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def casablanca():
    return Script.load(bundled_path("casablanca.json"))


@pytest.fixture(scope="session")
def restaurant():
    return Script.load(bundled_path("restaurant.json"))


@pytest.fixture(scope="session")
def run1_social():
    return load_social(bundled_path("casablanca-run1.social.json"))


@pytest.fixture(scope="session")
def run2_social():
    return load_social(bundled_path("casablanca-run2.social.json"))


@pytest.fixture(scope="session")
def cointreaux(casablanca):
    """Laszlo asks the waiter for two cointreaux, with the matching perspective."""
    act = instantiate_act("request-act", "laszlo", "waiter", casablanca.domain_acts["serve-cointreaux"])
    return act, Perspective.for_turn("laszlo", "waiter", casablanca.roster)


# -- acceptance summary ---------------------------------------------------------

_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rpartition("::")[2]
    if "test_acceptance.py" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.failed:
        _criteria[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda n: int(n.split("_")[2])):
        number, label = name.split("_")[2], " ".join(name.split("_")[3:])
        terminalreporter.write_line(f"criterion {number} ({label}): {_criteria[name]}")
