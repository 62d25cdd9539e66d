import pytest

from cp2tri import generators as gen
from cp2tri import symmetry as sym


@pytest.fixture(scope="session")
def X():
    return gen.gen_x()


@pytest.fixture(scope="session")
def Xbar():
    return gen.gen_xbar()


@pytest.fixture(scope="session")
def Y():
    return gen.gen_y()


@pytest.fixture(scope="session")
def group():
    return sym.group_elements()


@pytest.fixture(scope="session")
def torus_layers(X):
    return gen.subcomplex_t_p(X)


@pytest.fixture(scope="session")
def corpus():
    """Small closed complexes the invariant tests sweep over."""
    return {
        "bd_simplex_3": gen.gen_boundary_simplex(3),
        "bd_simplex_4": gen.gen_boundary_simplex(4),
        "cross_3": gen.gen_cross_polytope(3),
        "cross_4": gen.gen_cross_polytope(4),
        "rp2_6": gen.gen_rp2_6(),
        "torus_7": gen.gen_torus_7(),
        "grid_torus_9": gen.gen_grid_torus_9(),
        "torus_2_2": gen.gen_torus_36pq(2, 2),
    }
