import pytest
from hypothesis import settings

from reesalg.cli import load_manifest
from reesalg.hb import validate

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

P = 101

# [x^2 + y^2, xy, 0 | 0, y^4, x^4 + y^4]: d1 = 2 with a generalized zero, birational sextic.
EX1_RAW = [[[1, 0, 1], [0, 0, 0, 0, 0]], [[0, 1, 0], [1, 0, 0, 0, 0]], [[0, 0, 0], [1, 0, 0, 0, 1]]]
# [y^3, x^3, 0 | 0, y^3, x^3]: balanced cubic columns, a 3:1 parameterization.
EX2_RAW = [[[1, 0, 0, 0], [0, 0, 0, 0]], [[0, 0, 0, 1], [1, 0, 0, 0]], [[0, 0, 0, 0], [0, 0, 0, 1]]]


@pytest.fixture(scope="session")
def ex1():
    return validate(EX1_RAW, P, "EX1")


@pytest.fixture(scope="session")
def ex2():
    return validate(EX2_RAW, P, "EX2")


@pytest.fixture(scope="session")
def manifest():
    return load_manifest()


@pytest.fixture(scope="session")
def by_name(manifest):
    return {f.name: f for f in manifest}
