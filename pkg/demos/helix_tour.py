#!/usr/bin/env python3
"""A tour of helix geometry in the three model spaces.

Helices at distance r from an axis, traversed at unit speed, are the
projections of the horizontal geodesics.  Their curvature and torsion come
out of a single pair of closed forms

    kappa = sqrt((c^2 mu^2 - k)(1 - c^2)),    tau = c^2 mu,

where c is the axis speed and mu the winding rate.  The script checks these
against the classical flat-helix formulas and against a direct extraction
from the orbit generator, then walks the circle limit mu -> 0.
"""

import math

from screwgeo.helix import (circle_data, kappa_tau_from_axis,
                            kappa_tau_from_generator, standard_helix_generator,
                            translation_generator, unit_speed_axis_speed)
from screwgeo.spaceform import exp_at


def flat_helix_classical(r, mu):
    # textbook (a cos t, a sin t, b t) helix with a = r, b = 1/mu
    b = 1.0 / mu
    return r / (r * r + b * b), b / (r * r + b * b)


print("flat helices vs the classical formula")
print(f"{'r':>5} {'mu':>5} {'kappa':>12} {'tau':>12} {'classical dev':>14}")
for r, mu in [(1.0, 1.0), (2.0, 0.5), (0.3, 3.0)]:
    c = unit_speed_axis_speed(r, mu, 0)
    kappa, tau = kappa_tau_from_axis(c, mu, 0)
    ko, to = flat_helix_classical(r, mu)
    dev = max(abs(kappa - ko), abs(tau - to))
    print(f"{r:5.1f} {mu:5.1f} {kappa:12.8f} {tau:12.8f} {dev:14.2e}")

print()
print("the same numbers extracted from the orbit generator at radius r")
for k in (0, -1):
    r, mu = 0.8, 1.7
    c = unit_speed_axis_speed(r, mu, k)
    V = standard_helix_generator(c, mu, k)
    # conjugate the generator out to radius r: its orbit through the
    # basepoint is then the unit-speed helix itself
    T2 = translation_generator([0.0, 1.0, 0.0], k)
    W = exp_at(T2, -r) @ V @ exp_at(T2, r)
    kappa_axis, tau_axis = kappa_tau_from_axis(c, mu, k)
    kappa_gen, tau_gen = kappa_tau_from_generator(W, k)
    print(f"k={k:+d}: axis formula       ({kappa_axis:.12f}, {tau_axis:.12f})")
    print(f"       conjugated orbit  ({kappa_gen:.12f}, {tau_gen:.12f})")
    # the axis orbit itself is straight: unit-speed version has kappa = 0
    kappa0, _ = kappa_tau_from_generator(V / c, k)
    print(f"       the axis orbit is straight: kappa = {kappa0:.2e}")

print()
print("circle limit: circumference and geodesic curvature at radius r")
for k in (0, 1, -1):
    for r in (0.5, 1.0):
        length, kappa = circle_data(r, k)
        print(f"k={k:+d}  r={r:3.1f}   L={length:12.8f}   kappa={kappa:10.6f}")
print(f"(flat check: L(1.0) = 2*pi = {2 * math.pi:.8f})")
