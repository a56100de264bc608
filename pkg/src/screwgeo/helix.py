"""Helix geometry in the constant-curvature model spaces.

A helix is a unit-speed curve with constant curvature and torsion.  This
module converts between the three descriptions the package uses:

  * axis data (radius r, angular speed mu, axis speed c) for helices winding
    around a geodesic axis,
  * Frenet data (curvature kappa, torsion tau),
  * one-parameter subgroup generators whose orbits realize the helix.

The curvature-scaled trigonometric functions

    sin_1 = sin,   sin_0 = id,   sin_-1 = sinh,      cos_k = sin_k'

satisfy cos_k^2 + k*sin_k^2 = 1 and appear throughout: a circle of radius r
has circumference 2*pi*sin_k(r) and curvature cot_k(r).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .spaceform import (E0, check_curvature, exp_at, phi, rotation_generator,
                        screw_generator, translation_generator)

TWO_PI = 2.0 * math.pi

#: below this curvature an orbit is treated as a geodesic (torsion set to 0)
KAPPA_GEODESIC_THRESHOLD = 1e-9


class SphericalRangeWarning(UserWarning):
    """Axis-helix computation requested for k=1, outside the certified range."""


class FrenetData(NamedTuple):
    kappa: float
    tau: float


class ComplexLength(NamedTuple):
    """Length ell and holonomy angle theta in [0, 2*pi) of a closed geodesic."""

    ell: float
    theta: float


def check_complex_length(cl: ComplexLength) -> ComplexLength:
    if not cl.ell > 0.0:
        raise ValueError(f"complex length needs ell > 0, got {cl.ell!r}")
    if not (0.0 <= cl.theta < TWO_PI):
        raise ValueError(
            f"holonomy angle must lie in [0, 2*pi), got {cl.theta!r}")
    return cl


@dataclass(frozen=True)
class HelixType:
    """Combinatorial type of a periodic helix around a closed geodesic axis.

    The helix closes after running q times along an axis of complex length
    cl = ell + i*theta while winding p times around it; p and q are coprime
    and q = 1 whenever p = 0.
    """

    cl: ComplexLength
    q: int
    p: int

    def __post_init__(self):
        check_complex_length(self.cl)
        if self.q < 1:
            raise ValueError(f"axis multiplicity q must be >= 1, got {self.q}")
        if math.gcd(abs(self.p), self.q) != 1:
            raise ValueError(
                f"helix type needs coprime (p, q), got p={self.p}, q={self.q}")


def sin_k(r: float, k: int) -> float:
    """Curvature-scaled sine: sin for k=1, identity for k=0, sinh for k=-1."""
    check_curvature(k)
    if k == 1:
        return math.sin(r)
    if k == -1:
        return math.sinh(r)
    return float(r)


def cos_k(r: float, k: int) -> float:
    """Derivative of sin_k: cos for k=1, constant 1 for k=0, cosh for k=-1."""
    check_curvature(k)
    if k == 1:
        return math.cos(r)
    if k == -1:
        return math.cosh(r)
    return 1.0


def cot_k(r: float, k: int) -> float:
    return cos_k(r, k) / sin_k(r, k)


def arcsin_k(s: float, k: int) -> float:
    """Inverse of sin_k on the principal branch r >= 0."""
    check_curvature(k)
    if k == 1:
        if not -1.0 <= s <= 1.0:
            raise ValueError(f"arcsin argument must lie in [-1, 1], got {s!r}")
        return math.asin(s)
    if k == -1:
        return math.asinh(s)
    return float(s)


def standard_helix_point(r: float, k: int) -> np.ndarray:
    """Starting point (cos_k r, 0, sin_k r, 0) at distance r from the axis."""
    return np.array([cos_k(r, k), 0.0, sin_k(r, k), 0.0])


def standard_helix_generator(c: float, mu: float, k: int) -> np.ndarray:
    """Generator of the standard helix with axis through e0 in direction e1.

    The matrix c * [[0, -k*e1^T], [e1, mu*L_e1]] translates along the x1-axis
    at speed c while rotating the orthogonal (x2,x3)-plane at rate c*mu.  Its
    orbit through standard_helix_point(r, k) is the helix of radius r, angular
    speed mu and axis speed c; see standard_helix_orbit for the closed form.
    """
    check_curvature(k)
    if not c > 0.0:
        raise ValueError(f"axis speed must be positive, got {c!r}")
    if k == 0 and mu == 0.0:
        raise ValueError("flat helices with an axis need nonzero angular speed")
    return c * screw_generator([1.0, 0.0, 0.0], mu, k)


def rotation_pair(s_axis: float, s_fiber: float, k: int) -> np.ndarray:
    """Block matrix diag(R_k(s_axis), R(s_fiber)).

    R_k(s) = [[cos_k s, -k sin_k s], [sin_k s, cos_k s]] moves distance s
    along the axis geodesic in the (x0,x1)-plane; R(s) is the Euclidean
    rotation of the (x2,x3)-plane.
    """
    check_curvature(k)
    g = np.zeros((4, 4))
    g[0, 0] = cos_k(s_axis, k)
    g[0, 1] = -k * sin_k(s_axis, k)
    g[1, 0] = sin_k(s_axis, k)
    g[1, 1] = cos_k(s_axis, k)
    g[2, 2] = math.cos(s_fiber)
    g[2, 3] = -math.sin(s_fiber)
    g[3, 2] = math.sin(s_fiber)
    g[3, 3] = math.cos(s_fiber)
    return g


def standard_helix_orbit(r: float, mu: float, c: float, k: int,
                         t: float) -> np.ndarray:
    """Point of the standard helix at time t, in closed block-rotation form.

    Equals exp(t * standard_helix_generator(c, mu, k)) applied to
    standard_helix_point(r, k); the exponential splits into the two commuting
    plane rotations of rotation_pair.
    """
    return rotation_pair(c * t, c * mu * t, k) @ standard_helix_point(r, k)


def unit_speed_axis_speed(r: float, mu: float, k: int) -> float:
    """Axis speed c making the helix with radius r, angular speed mu unit speed.

    Solves c^2 * (cos_k(r)^2 + mu^2 sin_k(r)^2) = 1.  For k in {0, -1} the
    result always lies in (0, 1); as r -> 0 the helix degenerates to its axis
    and c -> 1.
    """
    check_curvature(k)
    if not r > 0.0:
        raise ValueError(f"helix radius must be positive, got {r!r}")
    if k == 0 and mu == 0.0:
        raise ValueError("flat helices with an axis need nonzero angular speed")
    if k == 1:
        warnings.warn("spherical axis data: outside the certified range",
                      SphericalRangeWarning, stacklevel=2)
    return (cos_k(r, k) ** 2 + mu * mu * sin_k(r, k) ** 2) ** -0.5


def kappa_tau_from_axis(c: float, mu: float, k: int) -> FrenetData:
    """Curvature and torsion of the unit-speed helix with axis data (c, mu):

        kappa = sqrt((c^2 mu^2 - k)(1 - c^2)),   tau = c^2 mu.

    The radicand is nonnegative whenever k in {0, -1} and 0 < c < 1; for k=1
    it can fail, in which case the axis data describes no helix and a
    ValueError is raised.
    """
    check_curvature(k)
    if k == 1:
        warnings.warn("spherical axis data: outside the certified range",
                      SphericalRangeWarning, stacklevel=2)
    radicand = (c * c * mu * mu - k) * (1.0 - c * c)
    if radicand < 0.0:
        raise ValueError(
            f"axis data (c={c!r}, mu={mu!r}, k={k}) admits no helix: "
            f"negative curvature radicand {radicand!r}")
    return FrenetData(math.sqrt(radicand), c * c * mu)


def kappa_tau_from_generator(V, k: int,
                             unit_speed_tol: float = 1e-9) -> FrenetData:
    """Curvature and torsion of the orbit t -> exp(t*V).e0 of a generator.

    Uses kappa = ||V^2 e0 + k e0|| and kappa^2 tau = <V^3 e0, V e0 x (V^2 e0
    + k e0)>, valid for unit-speed generators (||V e0|| = 1).  Curvature below
    KAPPA_GEODESIC_THRESHOLD means the orbit is a geodesic; its torsion is
    reported as 0.
    """
    check_curvature(k)
    V = np.asarray(V, dtype=float)
    v1 = V @ E0
    speed = float(np.linalg.norm(v1[1:]))
    if abs(speed - 1.0) > unit_speed_tol:
        raise ValueError(
            f"generator is not unit speed: ||V.e0|| = {speed!r}")
    w = V @ v1 + k * E0
    kappa = float(np.linalg.norm(w[1:]))
    if kappa < KAPPA_GEODESIC_THRESHOLD:
        return FrenetData(kappa, 0.0)
    v3 = V @ (V @ v1)
    tau = float(np.dot(v3[1:], np.cross(v1[1:], w[1:]))) / (kappa * kappa)
    return FrenetData(kappa, tau)


def generator_from_kappa_tau(kappa: float, tau: float, k: int) -> np.ndarray:
    """Generator of the unit-speed helix with the given Frenet data whose
    Frenet frame at t = 0 is the standard frame at e0.

    Block form [[0, -k*e1^T], [e1, L_{tau*e1 + kappa*e3}]]: motion along e1
    with rotation part tau*e1 + kappa*e3.  Inverse of kappa_tau_from_generator
    up to repositioning.
    """
    check_curvature(k)
    if kappa < 0.0:
        raise ValueError(f"curvature must be nonnegative, got {kappa!r}")
    Z = translation_generator([1.0, 0.0, 0.0], k)
    Z += rotation_generator([tau, 0.0, kappa])
    return Z


def frenet_frame(Z, t: float, k: int):
    """Frenet frame at time t of the helix generated by Z.

    The frame of the orbit of exp(t*Z) through e0, read off the flow itself;
    at t = 0 it is the standard frame.  For generators built by
    generator_from_kappa_tau the columns are (tangent, normal, binormal).
    """
    return phi(exp_at(Z, t), k)


def circle_data(r: float, k: int) -> tuple[float, float]:
    """(circumference, curvature) = (2*pi*sin_k r, cot_k r) of a circle.

    Spherical circles need r < pi (radius measured from the nearer center).
    """
    check_curvature(k)
    if not r > 0.0:
        raise ValueError(f"circle radius must be positive, got {r!r}")
    if k == 1 and not r < math.pi:
        raise ValueError(f"spherical circles need radius < pi, got {r!r}")
    return TWO_PI * sin_k(r, k), cot_k(r, k)


def helix_type_params(ht: HelixType, c: float) -> tuple[float, float]:
    """Period L = q*ell/c and angular speed mu = (2*pi*p/q - theta)/ell of the
    periodic helix of type ht around an axis traversed at speed c in (0, 1)."""
    if not 0.0 < c < 1.0:
        raise ValueError(f"axis speed must lie in (0, 1), got {c!r}")
    L = ht.q * ht.cl.ell / c
    mu = (TWO_PI * ht.p / ht.q - ht.cl.theta) / ht.cl.ell
    return L, mu
