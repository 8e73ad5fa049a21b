import random

import pytest

from conftest import SUITE_GROUPS
from mckay_moduli import build_group, build_quiver
from mckay_moduli.checks import (
    flow_images_up_to,
    random_parameter,
    run_all,
    verify_closed_walks,
    verify_cycle_types,
    verify_kernel_lattice,
    verify_theta_routing,
)


@pytest.mark.parametrize("spec,orders,weights", SUITE_GROUPS)
def test_run_all_suite_groups(spec, orders, weights):
    q = build_quiver(build_group(orders, weights))
    results = run_all(q, bound=4, seed=0, trials=5)
    failures = [(name, detail) for name, ok, detail in results if not ok]
    assert failures == []
    names = [name for name, _, _ in results]
    assert "kernel-lattice" in names
    assert "cycle-types" in names


def test_kernel_lattice_on_larger_groups():
    # the binomial vectors generate the full integer kernel, also at sizes
    # where the general enumeration checks are skipped
    for orders, weights in [([11], [[1, 2, 8]]), ([6], [[1, 2, 3]]), ([13], [[1, 5]])]:
        q = build_quiver(build_group(orders, weights))
        verify_kernel_lattice(q)


def test_theta_routing_hundred_parameters():
    # one hundred random parameters across the suite groups
    per_group = 20
    for idx, (spec, orders, weights) in enumerate(SUITE_GROUPS):
        q = build_quiver(build_group(orders, weights))
        verify_theta_routing(q, trials=per_group, seed=100 + idx)


def test_cycle_type_identification_bound_six():
    for spec, orders, weights in SUITE_GROUPS:
        q = build_quiver(build_group(orders, weights))
        verify_cycle_types(q, bound=6)


def test_closed_walks_random_kernel_vectors():
    q = build_quiver(build_group([7], [[1, 2]]))
    verify_closed_walks(q, trials=25, seed=3)


def test_random_parameter_sums_to_zero():
    q = build_quiver(build_group([5], [[1, 2]]))
    rng = random.Random(0)
    for _ in range(20):
        theta = random_parameter(q, rng)
        assert len(theta) == 5
        assert sum(theta) == 0


def test_flow_images_contains_type_zero():
    q = build_quiver(build_group([2], [[1, 1]]))
    images = flow_images_up_to(q, (0, 0), 4)
    assert (0, 0) in images
    for m in images:
        assert sum(m) % 2 == 0


def test_run_all_n_equals_one():
    q = build_quiver(build_group([2], [[1]]))
    results = run_all(q, bound=4, seed=0, trials=5)
    assert all(ok for _, ok, _ in results)
