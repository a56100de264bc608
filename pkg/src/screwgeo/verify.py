"""Randomized invariant batteries behind the `verify` CLI subcommand.

Also home of the finite-difference Frenet apparatus used as an independent
numerical oracle: curvature and torsion of a curve in the model space are
recovered from central differences and the covariant derivative

    Dv/dt = v'(t) - k * <v'(t), h(t)>_k * h(t)

without touching the closed-form generator identities they are checked
against.

Each suite draws a seeded random sample, evaluates one family of identities,
and reports the worst residual against its tolerance.  The environment
variable SCREWGEO_VERIFY_TOL, when set, overrides every suite tolerance (a
deliberately blunt instrument: it exists so a pipeline can prove the failure
path works).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .geodesic import (GeodesicSpec, ScrewConfig, geodesic_geometric,
                       geodesic_lie, horizontality_check)
from .helix import generator_from_kappa_tau, kappa_tau_from_generator
from .spaceform import (check_curvature, exp_at, inner_k, rotation_generator,
                        translation_generator)
from .spectrum import (CLSpectrum, EnumerationBudget, full_spectrum,
                       model_spectrum, verify_entry)

ENV_TOL = "SCREWGEO_VERIFY_TOL"

SUITE_NAMES = ("horizontality", "frenet", "equivalence", "closing")


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    check: str
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol


def _tol(default: float) -> float:
    override = os.environ.get(ENV_TOL)
    return float(override) if override is not None else default


# ---------------------------------------------------------------------------
# finite-difference Frenet apparatus

def covariant_derivative(curve, field, t: float, k: int,
                         h: float = 1e-4) -> np.ndarray:
    """Covariant derivative along a curve of a tangent field, by central
    differences: Dv/dt = v' - k <v', h(t)>_k h(t)."""
    vdot = (np.asarray(field(t + h)) - np.asarray(field(t - h))) / (2.0 * h)
    p = np.asarray(curve(t))
    return vdot - k * inner_k(vdot, p, k) * p


def tangent_cross(p, u, v, k: int) -> np.ndarray:
    """Cross product of tangent vectors at p, dual to x -> det[p, u, v, x].

    Reduces to the spatial cross product at e0 and is equivariant under
    orientation-preserving isometries.
    """
    check_curvature(k)
    p = np.asarray(p, float)
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    if k == 0:
        out = np.zeros(4)
        out[1:] = np.cross(u[1:], v[1:])
        return out
    rows = np.vstack([p, u, v])
    cof = np.zeros(4)
    for j in range(4):
        minor = np.delete(rows, j, axis=1)
        cof[j] = (-1) ** (3 + j) * np.linalg.det(minor)
    cof[0] *= k  # apply diag(k,1,1,1)^{-1} = diag(k,1,1,1) for k = +-1
    return cof


def fd_frenet_data(curve, t: float, k: int, h: float = 1e-4, velocity=None):
    """Curvature and torsion of a unit-speed curve by finite differences.

    The covariant derivatives of the Frenet fields are taken by central
    differences of step h.  velocity, when given, supplies the exact tangent
    field of the curve (trivially available for flow orbits); otherwise the
    tangent is itself differenced, which is adequate for curvature but stacks
    a third difference level onto the torsion and costs accuracy.

    Returns (kappa, tau, residual of DN/dt = -kappa*T + tau*B); tau is
    reported as 0 when the curvature vanishes to differencing accuracy.
    """
    if velocity is None:
        def velocity(s):
            return (np.asarray(curve(s + h))
                    - np.asarray(curve(s - h))) / (2.0 * h)

    def N_raw(s):
        return covariant_derivative(curve, velocity, s, k, h)

    DT = N_raw(t)
    kappa = math.sqrt(max(inner_k(DT, DT, k), 0.0))
    if kappa < 1e-7:
        # geodesic to FD accuracy; torsion is undefined, reported as 0
        return kappa, 0.0, float(np.max(np.abs(DT)))

    def N(s):
        dv = N_raw(s)
        return dv / math.sqrt(inner_k(dv, dv, k))

    p = np.asarray(curve(t))
    Tt = np.asarray(velocity(t), dtype=float)
    Tt = Tt / math.sqrt(inner_k(Tt, Tt, k))
    Nt = N(t)
    B = tangent_cross(p, Tt, Nt, k)
    B = B / math.sqrt(inner_k(B, B, k))
    DN = covariant_derivative(curve, N, t, k, h)
    tau = inner_k(DN, B, k)
    # residual of DN = -kappa T + tau B
    res = DN + kappa * Tt - tau * B
    residual = math.sqrt(abs(inner_k(res, res, k)))
    return kappa, tau, residual


def fd_frame_residuals(Z, t: float, k: int, h: float = 1e-4):
    """Residuals of the Frenet equations for the frame flow of the generator
    Z at time t: (DT - kappa*N, DN + kappa*T - tau*B, DB + tau*N) norms,
    with kappa, tau computed from the generator."""
    kappa, tau = kappa_tau_from_generator(Z, k)

    def col(i):
        def field(s):
            return exp_at(Z, s)[:, i]
        return field

    curve = col(0)
    T, N, B = col(1), col(2), col(3)
    DT = covariant_derivative(curve, T, t, k, h)
    DN = covariant_derivative(curve, N, t, k, h)
    DB = covariant_derivative(curve, B, t, k, h)
    r1 = DT - kappa * np.asarray(N(t))
    r2 = DN + kappa * np.asarray(T(t)) - tau * np.asarray(B(t))
    r3 = DB + tau * np.asarray(N(t))
    return (float(np.linalg.norm(r1)), float(np.linalg.norm(r2)),
            float(np.linalg.norm(r3)))


# ---------------------------------------------------------------------------
# samplers

def random_config(rng) -> ScrewConfig:
    k = int(rng.choice([0, 1, -1]))
    while True:
        lam = float(rng.uniform(-3.0, 3.0))
        if lam != k * k:
            return ScrewConfig(k, lam)


def random_unit_vector(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_unit_speed_generator(k: int, rng, min_kappa: float = 1e-2,
                                min_tau: float = 0.0):
    """Random generator with ||V.e0|| = 1, rejection-sampled so curvature
    (and, when min_tau > 0, |torsion|) stay away from zero; relative-error
    comparisons against finite differences are ill-posed at the origin."""
    while True:
        x = random_unit_vector(rng)
        z = rng.normal(scale=1.0, size=3)
        V = translation_generator(x, k) + rotation_generator(z)
        kappa, tau = kappa_tau_from_generator(V, k)
        if kappa >= min_kappa and abs(tau) >= min_tau:
            return V


def random_group_element(k: int, rng, scale: float = 0.5) -> np.ndarray:
    """Random isometry, as a product of two moderate exponentials (moderate so
    that k = -1 elements stay in a numerically comfortable range)."""
    g = np.eye(4)
    for _ in range(2):
        x = scale * rng.normal(size=3)
        z = rng.normal(size=3)
        g = g @ exp_at(translation_generator(x, k) + rotation_generator(z))
    return g


# ---------------------------------------------------------------------------
# suites

def suite_horizontality(seed: int = 0, samples: int = 40):
    """Geodesics in Lie form stay on the screw distribution at unit speed."""
    tol = _tol(1e-6)
    rng = np.random.default_rng(seed)
    worst_res = 0.0
    worst_speed = 0.0
    for _ in range(samples):
        cfg = random_config(rng)
        x = random_unit_vector(rng)
        y = rng.normal(size=3)
        gspec = GeodesicSpec.lie(x, y, cfg)
        times = rng.uniform(0.0, 8.0, size=5)
        report = horizontality_check(gspec, times)
        worst_res = max(worst_res, report.max_residual)
        worst_speed = max(worst_speed, report.max_speed_deviation(1.0))
    return [SuiteResult("horizontality", "off-distribution residual",
                        worst_res, tol),
            SuiteResult("horizontality", "|speed - 1|", worst_speed, tol)]


def suite_frenet(seed: int = 0, samples: int = 30):
    """Closed-form curvature/torsion match the finite-difference Frenet data,
    and the frame flow satisfies the Frenet equations."""
    tol_data = _tol(1e-4)
    tol_eqs = _tol(1e-5)
    rng = np.random.default_rng(seed)
    worst_data = 0.0
    worst_eqs = 0.0
    for _ in range(samples):
        k = int(rng.choice([0, 1, -1]))
        V = random_unit_speed_generator(k, rng, min_kappa=0.1, min_tau=0.05)
        kappa, tau = kappa_tau_from_generator(V, k)

        def curve(s, V=V):
            return exp_at(V, s)[:, 0]

        def velocity(s, V=V):
            return V @ exp_at(V, s)[:, 0]

        t = float(rng.uniform(0.0, 2.0))
        kappa_fd, tau_fd, _ = fd_frenet_data(curve, t, k, velocity=velocity)
        worst_data = max(worst_data, abs(kappa_fd - kappa) / kappa)
        worst_data = max(worst_data, abs(tau_fd - tau) / abs(tau))
        Z = generator_from_kappa_tau(kappa, tau, k)
        scale = 1.0 + kappa + abs(tau)
        worst_eqs = max(worst_eqs,
                        max(fd_frame_residuals(Z, t, k)) / scale)
    return [SuiteResult("frenet", "closed form vs finite differences",
                        worst_data, tol_data),
            SuiteResult("frenet", "Frenet equations of the frame flow",
                        worst_eqs, tol_eqs)]


def suite_equivalence(seed: int = 0, samples: int = 40, grid: int = 25):
    """The Lie and geometric closed forms produce the same frames."""
    tol = _tol(1e-9)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        cfg = random_config(rng)
        kappa = float(rng.uniform(0.0, 3.0))
        tau = float(rng.uniform(-3.0, 3.0))
        y = np.array([tau - cfg.lam, 0.0, kappa])
        for t in np.linspace(0.0, 10.0, grid):
            g_lie = geodesic_lie(np.array([1.0, 0.0, 0.0]), y, cfg, float(t))
            fr = geodesic_geometric(kappa, tau, np.eye(3), cfg, float(t))
            worst = max(worst, float(np.max(np.abs(g_lie - fr.matrix()))))
    return [SuiteResult("equivalence", "lie vs geometric frames", worst, tol)]


def _sample_clspectra():
    base = resources.files("screwgeo") / "data"
    from .spectrum import load_clspectrum  # local import to avoid cycle noise
    flat = load_clspectrum(str(base / "clspec_flat_sample.json"))
    hyp = load_clspectrum(str(base / "clspec_hyperbolic_sample.json"))
    return flat, hyp


def suite_closing(seed: int = 0):
    """Every emitted spectrum entry passes its independent closure checks."""
    tol = _tol(0.0)  # residual here counts failed verifications
    failures = 0
    total = 0
    runs = [
        (ScrewConfig(0, 1.0), EnumerationBudget(cutoff=25.0), None),
        (ScrewConfig(0, 2.0), EnumerationBudget(cutoff=25.0), None),
        (ScrewConfig(-1, 0.5), EnumerationBudget(cutoff=12.0), None),
    ]
    flat, hyp = _sample_clspectra()
    runs.append((ScrewConfig(0, 1.0), EnumerationBudget(cutoff=16.0), flat))
    runs.append((ScrewConfig(-1, 0.5), EnumerationBudget(cutoff=9.0), hyp))
    for cfg, budget, cls_ in runs:
        if cls_ is None:
            entries = model_spectrum(cfg, budget)
        else:
            entries = full_spectrum(cls_, cfg, budget)
        for e in entries:
            total += 1
            if not verify_entry(e, cfg).ok:
                failures += 1
    # spherical model spectrum entries verify too
    cfg = ScrewConfig(1, 0.0)
    for e in model_spectrum(cfg, EnumerationBudget(cutoff=13.0)):
        total += 1
        if not verify_entry(e, cfg).ok:
            failures += 1
    return [SuiteResult("closing", f"verified witnesses ({total} entries)",
                        float(failures), tol)]


def run_suites(names, seed: int = 0):
    """Run the named suites ('all' for every one); returns the result list."""
    if isinstance(names, str):
        names = SUITE_NAMES if names == "all" else (names,)
    results = []
    for name in names:
        fn = {"horizontality": suite_horizontality,
              "frenet": suite_frenet,
              "equivalence": suite_equivalence,
              "closing": suite_closing}[name]
        results.extend(fn(seed=seed))
    return results
