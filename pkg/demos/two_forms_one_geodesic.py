#!/usr/bin/env python3
"""Same geodesic, two constructions.

A horizontal geodesic of the screw structure can be written either as a
product of two matrix exponentials (Lie form) or as a twisted Frenet frame
along a helix in the base (geometric form).  With the controls matched by

    y = (tau - lam) e1 + kappa e3,

the two agree frame-for-frame.  This script builds both in all three model
geometries and prints the largest entrywise deviation over a time grid.
"""

import numpy as np

from screwgeo.geodesic import ScrewConfig, geodesic_geometric, geodesic_lie

E1 = np.array([1.0, 0.0, 0.0])
GRID = np.linspace(0.0, 10.0, 101)

CASES = [
    (ScrewConfig(0, 1.0), 1.0, 0.5),     # flat base
    (ScrewConfig(1, 0.5), 0.7, -0.3),    # spherical base
    (ScrewConfig(-1, 2.0), 1.3, 0.9),    # hyperbolic base
]

for cfg, kappa, tau in CASES:
    y = np.array([tau - cfg.lam, 0.0, kappa])
    worst = 0.0
    for t in GRID:
        g = geodesic_lie(E1, y, cfg, float(t))
        f = geodesic_geometric(kappa, tau, np.eye(3), cfg, float(t))
        worst = max(worst, float(np.max(np.abs(g - f.matrix()))))
    print(f"k={cfg.k:+d}  lam={cfg.lam:4.1f}  kappa={kappa:.1f}  "
          f"tau={tau:+.1f}   sup |lie - geometric| = {worst:.3e}")

print()
print("a few frames of the flat case, geometric form:")
cfg, kappa, tau = CASES[0]
for t in (0.0, 1.0, 2.0):
    f = geodesic_geometric(kappa, tau, np.eye(3), cfg, t)
    with np.printoptions(precision=4, suppress=True):
        print(f"t = {t}")
        print(f.matrix())
