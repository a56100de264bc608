import numpy as np
import pytest

from screwgeo.spaceform import exp_at
from screwgeo.helix import translation_generator
from screwgeo.verify import (SUITE_NAMES, fd_frenet_data,
                             random_unit_speed_generator, run_suites)


def test_all_suites_pass_at_default_tolerances():
    results = run_suites("all")
    assert {r.suite for r in results} == set(SUITE_NAMES)
    for r in results:
        assert r.passed, (r.suite, r.check, r.residual, r.tol)


def test_suites_pass_under_a_different_seed():
    for r in run_suites(["horizontality", "equivalence"], seed=7):
        assert r.passed


def test_fd_frenet_data_on_a_straight_geodesic():
    # a pure translation orbit has no curvature; torsion is reported as zero
    V = translation_generator(np.array([1.0, 0.0, 0.0]), 0)
    kappa, tau, _ = fd_frenet_data(lambda s: exp_at(V, s)[:, 0], 0.7, 0)
    assert kappa < 1e-7
    assert tau == 0.0


def test_random_unit_speed_generator_respects_floors():
    from screwgeo.helix import kappa_tau_from_generator
    rng = np.random.default_rng(3)
    for k in (0, 1, -1):
        V = random_unit_speed_generator(k, rng, min_kappa=0.3, min_tau=0.2)
        kappa, tau = kappa_tau_from_generator(V, k)
        assert kappa >= 0.3
        assert abs(tau) >= 0.2


def test_unknown_suite_name_is_an_error():
    with pytest.raises(KeyError):
        run_suites("frobnicate")
