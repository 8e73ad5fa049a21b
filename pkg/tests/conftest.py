import pytest

import golden
from mckay_moduli import build_group, build_quiver, moduli_fan, theta_polyhedron

# Default battery of actions exercised by the property suites.  Entries are
# (cli_spec, orders, weights); r*n stays small enough for exact enumeration.
SUITE_GROUPS = [
    ("1/2(1)", [2], [[1]]),
    ("1/7(1,2)", [7], [[1, 2]]),
    ("1/3(1,1,1)", [3], [[1, 1, 1]]),
    ("1/5(1,3)", [5], [[1, 3]]),
    ("2x2:1,0;0,1", [2, 2], [[1, 0], [0, 1]]),
]


def suite_quivers():
    return [(spec, build_quiver(build_group(orders, weights)))
            for spec, orders, weights in SUITE_GROUPS]


@pytest.fixture(scope="session")
def example_quiver():
    return build_quiver(build_group(golden.EXAMPLE_ORDERS, golden.EXAMPLE_WEIGHTS))


@pytest.fixture(scope="session")
def example_tp(example_quiver):
    return theta_polyhedron(example_quiver, golden.EXAMPLE_THETA)


@pytest.fixture(scope="session")
def example_fan(example_tp):
    return moduli_fan(example_tp)
