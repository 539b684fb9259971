import pytest

from cambrianite.app import create_app
from cambrianite.coxeter import build_system
from cambrianite.functions import parse_generators
from cambrianite.models.BasePoint import BasePoint
from cambrianite.sortable import CoxeterElementChoice


class Systems:
    """Systems built once per test session so the lattice and fan caches are shared"""

    def __init__(self):
        self._built = {}

    def __call__(self, name, unit_roots=False):
        key = (name, unit_roots)
        if key not in self._built:
            self._built[key] = build_system(name, unit_roots=unit_roots)
        return self._built[key]


@pytest.fixture
def app(tmp_path):
    app = create_app()
    app.config["TESTING"] = True
    app.config["CAMBRIANITE_DATA_FOLDER"] = str(tmp_path)
    return app


@pytest.fixture
def runner(app):
    return app.test_cli_runner()


@pytest.fixture(scope="session")
def systems():
    return Systems()


@pytest.fixture(scope="session")
def a2(systems):
    return systems("A2")


@pytest.fixture(scope="session")
def a3(systems):
    return systems("A3")


@pytest.fixture(scope="session")
def b2(systems):
    return systems("B2")


@pytest.fixture(scope="session")
def b3(systems):
    return systems("B3")


@pytest.fixture(scope="session")
def h3(systems):
    return systems("H3")


@pytest.fixture(scope="session")
def i2_5(systems):
    return systems("I2(5)")


@pytest.fixture(scope="session")
def element():
    """element(system, "s1s2s1") or element(system, "e")"""

    def build(system, word):
        if word == "e":
            return system.identity()
        return system.element_from_word(parse_generators(word, system.rank))

    return build


@pytest.fixture(scope="session")
def coxeter_element():
    def build(system, word=None):
        if word is None:
            return CoxeterElementChoice.default(system)
        return CoxeterElementChoice.parse(system, word)

    return build


@pytest.fixture(scope="session")
def ones():
    return BasePoint.balanced
