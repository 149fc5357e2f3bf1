"""Clips of a finite class against an infinite axial class.

An axial group (rotations about an axis u, possibly extended by
perpendicular half-turns, reflections or the central inversion) is
determined by u, and membership of an orthogonal matrix is a pointwise
predicate in u.  The intersection with a finite group G therefore only
depends on how u sits relative to the structural axes of G: the
critical positions are u parallel to an axis, u perpendicular to two
axes (their cross product), u perpendicular to exactly one axis
(generic point of that circle), and u fully generic.  Sweeping those
candidates is exhaustive, so this module provides an oracle for the
finite x infinite cells that is independent of the closed-form tables.
"""

from __future__ import annotations

import zlib

import numpy as np

from .labels import ClassLabel, ClassSet, format_label, order_of
from .groups import ORDER_CAP, recognize, reference_group, structural_axes
from .rotations import EPS_MAT, IDENTITY

_AXIAL_KINDS = {"SO2", "O2", "O2-", "SO3", "O3"}


def is_axial(label: ClassLabel) -> bool:
    """True for the infinite classes handled by clips_axial."""
    if label.kind == "SO3":
        return True
    return label.kind in _AXIAL_KINDS


def _axial_mask(label: ClassLabel, elems: np.ndarray, u: np.ndarray) -> np.ndarray:
    proper = np.linalg.det(elems) > 0
    if label.kind == "SO3" and label.plus:
        return np.ones(len(elems), dtype=bool)
    if label.kind == "SO3":
        return proper
    img = elems @ u
    fix = np.abs(img - u).max(axis=1) < 1e-9
    anti = np.abs(img + u).max(axis=1) < 1e-9
    invol = (
        np.abs(np.einsum("kij,kjl->kil", elems, elems) - IDENTITY).max(axis=(1, 2))
        < EPS_MAT
    )
    if label.kind == "SO2" and not label.plus:
        return proper & fix
    if label.kind == "O2" and not label.plus:
        return proper & (fix | (anti & invol))
    if label.kind == "SO2":
        return (proper & fix) | (~proper & anti)
    if label.kind == "O2":
        return np.where(proper, fix | (anti & invol), anti | (fix & invol))
    if label.kind == "O2-":
        return (proper & fix) | (~proper & fix & invol)
    raise ValueError(f"not an axial class: {format_label(label)}")


def _candidate_directions(elems: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    axes = structural_axes(elems)
    cands = [axes] if len(axes) else []
    for i in range(len(axes)):
        for j in range(i + 1, len(axes)):
            c = np.cross(axes[i], axes[j])
            n = np.linalg.norm(c)
            if n > 1e-9:
                cands.append(c[None] / n)
    probe = rng.normal(size=3)
    for a in axes:
        c = np.cross(a, probe)
        cands.append(c[None] / np.linalg.norm(c))
    randoms = rng.normal(size=(8, 3))
    cands.append(randoms / np.linalg.norm(randoms, axis=1, keepdims=True))
    return np.concatenate(cands)


def clips_axial(c_fin: ClassLabel, c_inf: ClassLabel, seed: int = 0) -> ClassSet:
    """Clips of a finite class with an axial or full infinite class.

    Parameters
    ----------
    c_fin : ClassLabel
        Finite class with order <= 256.
    c_inf : ClassLabel
        One of SO(2), O(2), SO(2)+Z2c, O(2)+Z2c, O(2)^-, SO(3), O(3).

    Returns
    -------
    ClassSet
        All conjugacy classes of intersections of a representative of
        c_fin with representatives of c_inf.
    """
    k = order_of(c_fin)
    if not np.isfinite(k) or k > ORDER_CAP:
        raise ValueError(f"finite class required, got {format_label(c_fin)}")
    if not is_axial(c_inf):
        raise ValueError(f"axial class required, got {format_label(c_inf)}")
    elems = reference_group(c_fin)
    tag = f"{format_label(c_fin)}|{format_label(c_inf)}|{seed}".encode()
    rng = np.random.default_rng(zlib.crc32(tag))
    if c_inf.kind == "SO3":
        cands = np.array([[0.0, 0.0, 1.0]])
    else:
        cands = _candidate_directions(elems, rng)
    seen: set[bytes] = set()
    out: set[ClassLabel] = set()
    for u in cands:
        mask = _axial_mask(c_inf, elems, u)
        key = mask.tobytes()
        if key in seen:
            continue
        seen.add(key)
        out.add(recognize(elems[mask]))
    return ClassSet(out)
