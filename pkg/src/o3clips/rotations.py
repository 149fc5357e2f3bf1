"""Rotation and rotoreflection matrices in O(3).

Every element of O(3) is R(n, theta) or -R(n, theta) for a unit axis n;
-R(n, pi) is the reflection through the plane normal to n and -R(n, 0)
is the inversion.  Elements are stored as plain 3x3 float arrays and
compared entrywise with a fixed tolerance: the groups handled here have
a minimum inter-element distance around 1e-2 while accumulated rounding
stays below 1e-12, so equality at 1e-9 is unambiguous.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

EPS_MAT = 1e-9    # entrywise matrix equality
EPS_AXIS = 1e-12  # minimum norm for a direction vector
MAX_DENOM = 60    # rotation angles are snapped to pi * p / q, q <= MAX_DENOM

IDENTITY = np.eye(3)


def unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v)
    if norm < EPS_AXIS:
        raise ValueError("zero direction vector")
    return v / norm


def skew(n: np.ndarray) -> np.ndarray:
    """Cross-product matrix j(n) with j(n) v = n x v."""
    x, y, z = n
    return np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])


def rotation(axis, angle: float) -> np.ndarray:
    """Rotation by ``angle`` about ``axis`` (Rodrigues formula)."""
    n = unit(axis)
    j = skew(n)
    return IDENTITY + np.sin(angle) * j + (1.0 - np.cos(angle)) * (j @ j)


def rotoreflection(axis, angle: float) -> np.ndarray:
    """-R(axis, angle); for angle = pi this is the reflection whose
    plane is normal to ``axis``."""
    return -rotation(axis, angle)


def reflection(normal) -> np.ndarray:
    return rotoreflection(normal, np.pi)


def mats_equal(a: np.ndarray, b: np.ndarray, eps: float = EPS_MAT) -> bool:
    return bool(np.max(np.abs(a - b)) < eps)


def is_orthogonal(g: np.ndarray, eps: float = 1e-8) -> bool:
    return bool(np.max(np.abs(g @ g.T - IDENTITY)) < eps)


def snap_angle(theta: float, max_denom: int = MAX_DENOM) -> float:
    """Snap an angle in [0, 2*pi) to the nearest pi * p / q, q small."""
    theta = float(theta) % (2.0 * np.pi)
    frac = Fraction(theta / np.pi).limit_denominator(max_denom)
    snapped = float(frac) * np.pi
    return snapped % (2.0 * np.pi)


def axis_angle(g: np.ndarray) -> tuple[np.ndarray, float]:
    """Axis and angle of a proper rotation.

    Returns
    -------
    (axis, angle)
        ``axis`` is a unit vector (sign such that angle is in (0, pi]
        where possible; arbitrary e3 for the identity), ``angle`` is
        snapped to a rational multiple of pi in [0, 2*pi).

    Notes
    -----
    For a half turn the antisymmetric part vanishes and the axis is
    recovered from the +1 eigenspace of g.
    """
    tr = float(np.trace(g))
    c = min(1.0, max(-1.0, (tr - 1.0) / 2.0))
    angle = float(np.arccos(c))
    if angle < 1e-7:
        return np.array([0.0, 0.0, 1.0]), 0.0
    if angle > np.pi - 1e-7:
        # +1 eigenvector of g, via the dominant column of g + I
        m = g + IDENTITY
        col = int(np.argmax(np.sum(m * m, axis=0)))
        axis = unit(m[:, col])
        return _canonical_sign(axis), snap_angle(np.pi)
    v = np.array([g[2, 1] - g[1, 2], g[0, 2] - g[2, 0], g[1, 0] - g[0, 1]])
    axis = unit(v)
    return axis, snap_angle(angle)


def _canonical_sign(axis: np.ndarray) -> np.ndarray:
    for comp in axis:
        if abs(comp) > 1e-7:
            return axis if comp > 0 else -axis
    raise ValueError("zero axis")


def canonical_axis(axis) -> np.ndarray:
    """Unit axis with a deterministic sign (first significant component
    positive), so that u and -u collapse to the same direction."""
    return _canonical_sign(unit(axis))


def align(a, b) -> np.ndarray:
    """A rotation taking direction ``a`` to direction ``b``."""
    a, b = unit(a), unit(b)
    cross = np.cross(a, b)
    dot = float(np.dot(a, b))
    norm = np.linalg.norm(cross)
    if norm < EPS_AXIS:
        if dot > 0:
            return IDENTITY.copy()
        # antiparallel: half turn about any axis orthogonal to a
        probe = np.array([1.0, 0.0, 0.0])
        if abs(np.dot(probe, a)) > 0.9:
            probe = np.array([0.0, 1.0, 0.0])
        return rotation(np.cross(a, probe), np.pi)
    angle = float(np.arctan2(norm, dot))
    return rotation(cross, angle)


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    """Haar-uniform random rotation from a normalized quaternion."""
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    w, x, y, z = q
    return np.array(
        [
            [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
            [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
            [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
        ]
    )
