"""Shared linear algebra for the three constant-curvature model geometries.

The three-dimensional model spaces of curvature k in {0, 1, -1} are realized
inside R^4:

    k = 1    unit sphere S^3:        <x,x>_1 = 1
    k = -1   hyperboloid model H^3:  <x,x>_-1 = -1, x0 > 0
    k = 0    affine chart {x0 = 1} of flat R^3

where the curvature-weighted bilinear form is

    <x,y>_k = k*x0*y0 + x1*y1 + x2*y2 + x3*y3.

Orientation-preserving isometries act linearly: SO(4) on the sphere, the
identity component of O(1,3) on hyperbolic space, and the rigid motions
{(1,0; a,A) : A in SO(3)} in the flat chart.  A group element g doubles as an
orthonormal frame: column 0 is the base point g.e0 and columns 1..3 are the
frame vectors g.e1, g.e2, g.e3 tangent there.  This identification of the
isometry group with the bundle of direct orthonormal frames is what the rest
of the package is built on.

Everything here is a pure function of numpy arrays; no state is kept.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

CURVATURES = (0, 1, -1)

E0 = np.array([1.0, 0.0, 0.0, 0.0])
E1 = np.array([0.0, 1.0, 0.0, 0.0])


def check_curvature(k: int) -> int:
    if k not in CURVATURES:
        raise ValueError(f"curvature label must be one of {CURVATURES}, got {k!r}")
    return int(k)


def metric_matrix(k: int) -> np.ndarray:
    """Gram matrix diag(k, 1, 1, 1) of the ambient bilinear form."""
    check_curvature(k)
    return np.diag([float(k), 1.0, 1.0, 1.0])


def inner_k(x, y, k: int) -> float:
    """Curvature-weighted form k*x0*y0 + x1*y1 + x2*y2 + x3*y3."""
    check_curvature(k)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return float(k * x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3])


def cross_op(v) -> np.ndarray:
    """Matrix of the linear map y -> v x y."""
    v = np.asarray(v, dtype=float)
    return np.array([
        [0.0, -v[2], v[1]],
        [v[2], 0.0, -v[0]],
        [-v[1], v[0], 0.0],
    ])


def rot(v, t: float) -> np.ndarray:
    """Rotation of R^3 about the axis v through the angle ||v||*t.

    Rodrigues form; the zero axis gives the identity for every t.
    """
    v = np.asarray(v, dtype=float)
    nv = float(np.linalg.norm(v))
    if nv == 0.0:
        return np.eye(3)
    angle = nv * t
    K = cross_op(v / nv)
    return np.eye(3) + np.sin(angle) * K + (1.0 - np.cos(angle)) * (K @ K)


def screw_generator(x, lam: float, k: int) -> np.ndarray:
    """Infinitesimal screw motion of pitch lam along the direction x.

    Block form [[0, -k*x^T], [x, lam*L_x]] with L_x the cross-product map: an
    infinitesimal translation along x coupled to a rotation about x, so that a
    frame moving a length ||x|| turns by lam*||x|| about its direction of
    motion.  These generators span the admissible directions of the screw
    structure; the sub-Riemannian norm of the generator is ||x||.
    """
    check_curvature(k)
    x = np.asarray(x, dtype=float)
    V = np.zeros((4, 4))
    V[0, 1:] = -k * x
    V[1:, 0] = x
    V[1:, 1:] = lam * cross_op(x)
    return V


def translation_generator(x, k: int) -> np.ndarray:
    """Pure infinitesimal translation along x (zero rotation block)."""
    return screw_generator(x, 0.0, k)


def rotation_generator(z) -> np.ndarray:
    """Pure infinitesimal rotation about z, fixing the base point e0."""
    V = np.zeros((4, 4))
    V[1:, 1:] = cross_op(z)
    return V


def exp_at(V, t: float = 1.0) -> np.ndarray:
    """Flow exp(t*V) of an infinitesimal isometry.

    Evaluated by scaling-and-squaring with a Pade kernel on the 4x4 matrix;
    relative accuracy stays near machine precision for ||t*V|| up to ~50,
    which covers every flow taken in this package.
    """
    return expm(t * np.asarray(V, dtype=float))


def algebra_defect(V, k: int) -> float:
    """Largest entrywise violation of the infinitesimal-isometry conditions.

    For k = +-1 this is ||V^T J + J V||_max with J = diag(k,1,1,1); in the
    flat case the first row must vanish and the rotation block must be skew.
    """
    check_curvature(k)
    V = np.asarray(V, dtype=float)
    if k == 0:
        first_row = float(np.max(np.abs(V[0])))
        skew = float(np.max(np.abs(V[1:, 1:] + V[1:, 1:].T)))
        return max(first_row, skew)
    J = metric_matrix(k)
    return float(np.max(np.abs(V.T @ J + J @ V)))


def group_defect(g, k: int) -> float:
    """Largest entrywise violation of the isometry-group conditions.

    For k = +-1: g^T J g = J, det g = 1 (and g00 > 0 when k = -1).  For k = 0:
    first row (1,0,0,0) and rotation block in SO(3).
    """
    check_curvature(k)
    g = np.asarray(g, dtype=float)
    if k == 0:
        row = float(np.max(np.abs(g[0] - E0)))
        A = g[1:, 1:]
        orth = float(np.max(np.abs(A.T @ A - np.eye(3))))
        det = abs(float(np.linalg.det(A)) - 1.0)
        return max(row, orth, det)
    J = metric_matrix(k)
    defect = float(np.max(np.abs(g.T @ J @ g - J)))
    defect = max(defect, abs(float(np.linalg.det(g)) - 1.0))
    if k == -1 and g[0, 0] <= 0.0:
        defect = max(defect, 1.0)
    return defect


@dataclass(frozen=True)
class Frame:
    """Point of the model space with a direct orthonormal tangent frame.

    p is the base point in R^4 (homogeneous x0 = 1 in the flat case); b holds
    the three frame vectors as the columns of a 4x3 matrix, each tangent at p.
    """

    p: np.ndarray
    b: np.ndarray
    k: int

    def matrix(self) -> np.ndarray:
        """4x4 matrix with columns (p, b1, b2, b3)."""
        return np.column_stack([self.p, self.b])


def frame_defect(f: Frame) -> float:
    """Largest violation of point membership, tangency, orthonormality and
    orientation for a candidate frame (orientation flips count as 1)."""
    k = check_curvature(f.k)
    p = np.asarray(f.p, dtype=float)
    b = np.asarray(f.b, dtype=float)
    worst = 0.0
    if k == 0:
        worst = max(worst, abs(p[0] - 1.0))
        worst = max(worst, float(np.max(np.abs(b[0, :]))))
    else:
        worst = max(worst, abs(inner_k(p, p, k) - k))
        if k == -1 and p[0] <= 0.0:
            worst = max(worst, 1.0)
        for i in range(3):
            worst = max(worst, abs(inner_k(b[:, i], p, k)))
    for i in range(3):
        for j in range(3):
            target = 1.0 if i == j else 0.0
            worst = max(worst, abs(inner_k(b[:, i], b[:, j], k) - target))
    if np.linalg.det(np.column_stack([p, b])) <= 0.0:
        worst = max(worst, 1.0)
    return worst


def phi(g, k: int) -> Frame:
    """Read a group element as a frame: base point g.e0, frame g.e1..g.e3."""
    g = np.asarray(g, dtype=float)
    return Frame(p=g[:, 0].copy(), b=g[:, 1:].copy(), k=check_curvature(k))


def phi_inv(f: Frame, tol: float = 1e-8) -> np.ndarray:
    """Group element carrying the standard frame at e0 to the given frame.

    Inverse of phi under the frame-bundle identification.  Frames whose
    invariant defect exceeds tol are rejected.
    """
    d = frame_defect(f)
    if d > tol:
        raise ValueError(
            f"not a valid frame: invariant defect {d:.3e} exceeds {tol:.1e}")
    return f.matrix()


def gram_schmidt_group(g, k: int) -> np.ndarray:
    """Re-project a near-group matrix onto the isometry group.

    Rescales the base-point column and orthonormalizes the frame columns under
    the ambient form.  Intended as optional drift correction after long flows,
    not as a substitute for accurate evaluation.
    """
    check_curvature(k)
    g = np.asarray(g, dtype=float).copy()
    if k == 0:
        g[0] = E0
        A, _ = np.linalg.qr(g[1:, 1:])
        if np.linalg.det(A) < 0.0:
            A = -A
        # keep the original column orientations where qr flipped signs
        for i in range(3):
            if A[:, i] @ g[1:, 1 + i] < 0.0:
                A[:, i] = -A[:, i]
        if np.linalg.det(A) < 0.0:
            A[:, 2] = -A[:, 2]
        g[1:, 1:] = A
        return g
    p = g[:, 0] / np.sqrt(abs(inner_k(g[:, 0], g[:, 0], k)))
    if k == -1 and p[0] < 0.0:
        p = -p
    cols = [p]
    for i in range(1, 4):
        v = g[:, i].copy()
        v = v - (inner_k(v, cols[0], k) / float(k)) * cols[0]
        for w in cols[1:]:
            v = v - inner_k(v, w, k) * w
        cols.append(v / np.sqrt(inner_k(v, v, k)))
    out = np.column_stack(cols)
    if np.linalg.det(out) < 0.0:
        out[:, 3] = -out[:, 3]
    return out
