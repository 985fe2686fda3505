import pytest

from constructions import chain_lattice, power_set_semiring, zmod_ring, lattice_semiring
from lattice_catalog import get_lattice_by_name
from poset_lattice import chain_lattice as chain_order, power_set_lattice


@pytest.fixture
def square():
    return get_lattice_by_name("square")


@pytest.fixture
def pentagon():
    return get_lattice_by_name("pentagon")


@pytest.fixture
def diamond():
    return get_lattice_by_name("diamond")


@pytest.fixture
def cube():
    return get_lattice_by_name("cube")


@pytest.fixture
def c5():
    return chain_lattice(5)


@pytest.fixture
def c2():
    return chain_lattice(2)


@pytest.fixture
def square_semiring(square):
    return lattice_semiring(square, name="L4")


@pytest.fixture
def z10():
    return zmod_ring(10)


@pytest.fixture
def z12():
    return zmod_ring(12)


@pytest.fixture
def boolean_16():
    return power_set_semiring(4)


@pytest.fixture
def chain_orders():
    return [chain_order(n) for n in range(1, 9)]


@pytest.fixture
def power_sets():
    return [power_set_lattice(k) for k in range(0, 5)]
