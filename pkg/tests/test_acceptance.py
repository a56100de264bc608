"""Acceptance gate: one test per advertised guarantee, at its stated
tolerance.  Each test prints one pass/fail line under pytest -v; random
samples are seeded so the gate is deterministic."""

import math

import numpy as np
import pytest

from oracles import (brute_force_circle_lengths, classical_helix_kappa_tau,
                     conjugated_helix_generator)
from screwgeo.cli import main
from screwgeo.geodesic import (GeodesicSpec, ScrewConfig, geodesic_geometric,
                               geodesic_lie, horizontality_check)
from screwgeo.helix import (ComplexLength, HelixType, TWO_PI, cot_k,
                            kappa_tau_from_axis, kappa_tau_from_generator,
                            standard_helix_generator, translation_generator,
                            unit_speed_axis_speed)
from screwgeo.spaceform import E1, exp_at
from screwgeo.spectrum import (EnumerationBudget, full_spectrum,
                               helix_type_lengths, load_clspectrum,
                               model_spectrum, spectrum_lengths, verify_entry)
from screwgeo.verify import fd_frenet_data, random_unit_speed_generator

from importlib import resources

DATA = resources.files("screwgeo") / "data"
GRID = np.linspace(0.0, 10.0, 50)


def sample_tuples(count=200, seed=20240820):
    """(cfg, kappa, tau) tuples shared by the form-equivalence and
    horizontality criteria."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        k = int(rng.choice([0, 1, -1]))
        lam = float(rng.uniform(-3.0, 3.0))
        if lam == k * k:
            continue
        kappa = float(rng.uniform(0.0, 3.0))
        tau = float(rng.uniform(-3.0, 3.0))
        out.append((ScrewConfig(k, lam), kappa, tau))
    return out


def test_01_lie_and_geometric_forms_agree():
    # sup entrywise distance between the two closed forms over 200 random
    # configurations and 50 grid points in [0, 10], bound 1e-9
    worst = 0.0
    for cfg, kappa, tau in sample_tuples():
        y = np.array([tau - cfg.lam, 0.0, kappa])
        for t in GRID:
            g = geodesic_lie(E1[1:], y, cfg, float(t))
            f = geodesic_geometric(kappa, tau, np.eye(3), cfg, float(t))
            worst = max(worst, float(np.max(np.abs(g - f.matrix()))))
    assert worst < 1e-9


def test_02_horizontality_and_unit_speed():
    # left log-derivatives stay on the screw distribution (residual < 1e-6,
    # h = 1e-4) and the speed stays within 1e-6 of 1 on the same sample
    worst_res = 0.0
    worst_speed = 0.0
    for cfg, kappa, tau in sample_tuples():
        y = np.array([tau - cfg.lam, 0.0, kappa])
        gs = GeodesicSpec.lie(E1[1:], y, cfg)
        report = horizontality_check(gs, GRID)
        worst_res = max(worst_res, report.max_residual)
        worst_speed = max(worst_speed, report.max_speed_deviation(1.0))
    assert worst_res < 1e-6
    assert worst_speed < 1e-6


def test_03_frenet_closed_form_vs_finite_differences():
    # closed-form curvature/torsion of 100 random unit-speed orbits agree
    # with the finite-difference Frenet apparatus to 1e-4 relative
    rng = np.random.default_rng(20240821)
    worst = 0.0
    for _ in range(100):
        k = int(rng.choice([0, 1, -1]))
        V = random_unit_speed_generator(k, rng, min_kappa=0.1, min_tau=0.05)
        kappa, tau = kappa_tau_from_generator(V, k)

        def curve(s, V=V):
            return exp_at(V, s)[:, 0]

        def velocity(s, V=V):
            return V @ exp_at(V, s)[:, 0]

        t = float(rng.uniform(0.0, 2.0))
        kappa_fd, tau_fd, _ = fd_frenet_data(curve, t, k, velocity=velocity)
        worst = max(worst, abs(kappa_fd - kappa) / kappa,
                    abs(tau_fd - tau) / abs(tau))
    assert worst < 1e-4

    # the classical Euclidean helix with c = 1/sqrt(2), mu = 1, r = 1 has
    # kappa = tau = 1/2 exactly
    kappa, tau = kappa_tau_from_axis(1.0 / math.sqrt(2.0), 1.0, 0)
    kappa_o, tau_o = classical_helix_kappa_tau(1.0, 1.0)
    assert abs(kappa - 0.5) < 1e-12 and abs(tau - 0.5) < 1e-12
    assert abs(kappa - kappa_o) < 1e-12 and abs(tau - tau_o) < 1e-12


def test_04_conjugated_generator_closed_form():
    # moving the standard helix generator out to radius r by conjugation
    # reproduces the closed-form matrix entrywise to 1e-12
    rng = np.random.default_rng(20240822)
    worst = 0.0
    for _ in range(100):
        k = int(rng.choice([0, 1, -1]))
        c = float(rng.uniform(0.1, 0.9))
        mu = float(rng.choice([-1.0, 1.0]) * rng.uniform(0.2, 3.0))
        r = float(rng.uniform(0.1, 1.4))
        V = standard_helix_generator(c, mu, k)
        T2 = translation_generator(np.array([0.0, 1.0, 0.0]), k)
        g = exp_at(T2, r)
        W = exp_at(T2, -r) @ V @ g
        worst = max(worst, float(np.max(np.abs(
            W - conjugated_helix_generator(c, mu, r, k)))))
    assert worst < 1e-12

    # the curvature of a unit-speed helix collapses to (1 - c^2) * cot_k(r)
    worst = 0.0
    for _ in range(100):
        k = int(rng.choice([0, -1]))
        r = float(rng.uniform(0.1, 2.0))
        mu = float(rng.choice([-1.0, 1.0]) * rng.uniform(0.2, 3.0))
        c = unit_speed_axis_speed(r, mu, k)
        kappa, _ = kappa_tau_from_axis(c, mu, k)
        short = (1.0 - c * c) * cot_k(r, k)
        worst = max(worst, abs(kappa - short) / short)
    assert worst < 1e-10


FLAT = ScrewConfig(0, 1.0)


def test_05a_flat_model_spectrum_is_verified_and_contains_the_targets():
    # the advertised lengths 2*pi*sqrt({3, 5, 8}) are all present to 1e-12
    # relative, and every emitted entry passes verification with closing
    # residual below 1e-10
    got = model_spectrum(FLAT, EnumerationBudget(cutoff=20.0))
    lengths = spectrum_lengths(got)
    for target in (TWO_PI * math.sqrt(3.0), TWO_PI * math.sqrt(5.0),
                   TWO_PI * math.sqrt(8.0)):
        assert any(abs(v - target) / target < 1e-12 for v in lengths)
    for e in got:
        report = verify_entry(e, FLAT)
        assert report.ok, report.failures()
        residual = next(c for c in report.checks
                        if c.name == "fundamental_residual")
        assert residual.value < 1e-10


@pytest.mark.xfail(strict=True, reason=(
    "the coprime pairs (4,3) and (5,4) also close below the cutoff, with "
    "lengths 2*pi*sqrt(7) and 6*pi, so the enumeration honestly yields five "
    "lengths, not three; an independent brute-force search concurs"))
def test_05b_flat_model_spectrum_is_exactly_three_lengths():
    got = spectrum_lengths(model_spectrum(FLAT, EnumerationBudget(cutoff=20.0)))
    assert brute_force_circle_lengths(0, 1.0, 20.0) == pytest.approx(got)
    assert len(got) == 3


def test_06_helix_type_reference_pipeline():
    # type (2*pi + 0i, 1, 1) at k = 0, lam = 1: (n, m) = (1, 1) gives length
    # 2*pi*sqrt(2) at radius 1, (1, 2) gives 2*pi*sqrt(5) at radius 2, and
    # the two independent radius routes agree to 1e-9
    ht = HelixType(ComplexLength(TWO_PI, 0.0), 1, 1)
    got = helix_type_lengths(ht, FLAT, EnumerationBudget(cutoff=16.0))
    by_nm = {(e.n, e.m): e for e in got}
    e11 = by_nm[(1, 1)]
    assert abs(e11.length - TWO_PI * math.sqrt(2.0)) < 1e-12 * e11.length
    assert abs(e11.r - 1.0) < 1e-12
    e12 = by_nm[(1, 2)]
    assert abs(e12.length - TWO_PI * math.sqrt(5.0)) < 1e-12 * e12.length
    assert abs(e12.r - 2.0) < 1e-12
    for e in (e11, e12):
        report = verify_entry(e, FLAT)
        assert report.ok
        routes = next(c for c in report.checks if c.name == "radius_routes")
        assert routes.value < 1e-9


def test_07_bundled_samples_closure_battery():
    # every entry emitted over the bundled sample spectra passes independent
    # verification: rotation closure < 1e-9 and exact primitivity
    runs = [
        ("clspec_flat_sample.json", FLAT),
        ("clspec_hyperbolic_sample.json", ScrewConfig(-1, 0.5)),
    ]
    checked = 0
    for name, cfg in runs:
        cls_ = load_clspectrum(str(DATA / name))
        for e in full_spectrum(cls_, cfg, EnumerationBudget(cutoff=12.0)):
            report = verify_entry(e, cfg)
            assert report.ok, (e, report.failures())
            for c in report.checks:
                if c.name == "rot_closure":
                    assert c.value < 1e-9
                if c.name.startswith("coprime"):
                    assert c.value == 0.0
            checked += 1
    assert checked > 100


def test_08_isospectrality_and_model_discrimination(tmp_path, capsys):
    # permuted/duplicated input rows give byte-identical spectra and the
    # comparer agrees; model spectra at lam = 2 vs lam = 3 differ
    out_a = tmp_path / "a.csv"
    out_b = tmp_path / "b.csv"
    for src, dst in [("clspec_flat_sample.json", out_a),
                     ("clspec_flat_sample_permuted.json", out_b)]:
        code = main(["spectrum", "-k", "0", "--lambda", "1.0",
                     "--cutoff", "12", "--out", str(dst), str(DATA / src)])
        assert code == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    assert main(["compare", str(out_a), str(out_b)]) == 0

    m2 = tmp_path / "m2.csv"
    m3 = tmp_path / "m3.csv"
    for lam, dst in [(2.0, m2), (3.0, m3)]:
        code = main(["model-spectrum", "-k", "0", "--lambda", str(lam),
                     "--cutoff", "25", "--out", str(dst)])
        assert code == 0
    assert main(["compare", str(m2), str(m3)]) == 1
    capsys.readouterr()


def test_09_budget_monotonicity():
    # doubling both the cutoff and m_max only adds entries; filtering the
    # doubled run back down reproduces the original run exactly
    cls_ = load_clspectrum(str(DATA / "clspec_flat_sample.json"))
    base_budget = EnumerationBudget(cutoff=8.0, m_max=6)
    base = full_spectrum(cls_, FLAT, base_budget)
    doubled = full_spectrum(cls_, FLAT,
                            EnumerationBudget(cutoff=16.0, m_max=12))
    assert set(base) <= set(doubled)
    filtered = [e for e in doubled
                if e.length <= base_budget.cutoff
                and (e.source != "helix_type" or e.m <= base_budget.m_max)]
    assert filtered == base
