import pytest

from pgcolor.construction import lower_bound_coloring
from pgcolor.geometry import build_space
from pgcolor.packings import build_packing_structure5
from pgcolor.pg32 import explicit_18_coloring, make_frame
from pgcolor.spreads import geometric_spread


@pytest.fixture(scope="session")
def pg22():
    return build_space(2, 2)


@pytest.fixture(scope="session")
def pg23():
    return build_space(2, 3)


@pytest.fixture(scope="session")
def pg32():
    return build_space(3, 2)


@pytest.fixture(scope="session")
def pg33():
    return build_space(3, 3)


@pytest.fixture(scope="session")
def pg52():
    return build_space(5, 2)


@pytest.fixture(scope="session")
def pg53():
    return build_space(5, 3)


@pytest.fixture(scope="session")
def spread32(pg32):
    return geometric_spread(pg32, 1)


@pytest.fixture(scope="session")
def spread33(pg33):
    return geometric_spread(pg33, 1)


@pytest.fixture(scope="session")
def spread52(pg52):
    return geometric_spread(pg52, 1)


@pytest.fixture(scope="session")
def structure52(pg52):
    return build_packing_structure5(pg52)


@pytest.fixture(scope="session")
def coloring52(pg52, structure52):
    return lower_bound_coloring(pg52, structure52)


@pytest.fixture(scope="session")
def frame32(pg32):
    return make_frame(pg32)


@pytest.fixture(scope="session")
def coloring18(frame32):
    return explicit_18_coloring(frame32)
