"""Brute-force clips oracle for pairs of finite classes.

clips([H1], [H2]) is the set of conjugacy classes of H1 ∩ g H2 g^-1
over all rotations g.  For the closed subgroups handled here every
intersection class is realized with g aligning a structural axis of H2
to one of H1 (plus a rotation about that axis), so a finite sweep of
aligners and axis rotations is exhaustive; random conjugations are
added as a safety net.

The sweep is pruned exactly: replacing g by h1 g h2 (h_i in the
reference groups) conjugates the intersection inside H1, so axes only
need to range over orbit representatives.
"""

from __future__ import annotations

import math
import zlib
from functools import lru_cache

import numpy as np

from .labels import ClassLabel, ClassSet, format_label, order_of, strip_z2c
from .groups import (
    ORDER_CAP,
    axis_orbit_reps,
    recognize,
    reference_group,
    structural_axes,
)
from .rotations import (
    EPS_MAT,
    IDENTITY,
    align,
    axis_angle,
    random_rotation,
    rotation,
    unit,
)

N_RANDOM = 64  # extra random conjugations per pair


def _cyclic_param(label: ClassLabel) -> int:
    """Largest cyclic order about a structural axis; sets the angular
    granularity needed to hit every critical alignment exactly."""
    kind = strip_z2c(label).kind
    if kind in ("Z", "D", "Z-", "Dz", "Dd"):
        return max(2, label.n)
    return {"1": 1, "T": 3, "O": 4, "I": 5, "O-": 4}[kind]


class _Prepped:
    """Per-label matching structure: elements bucketed by trace.

    Conjugation preserves the trace, so a candidate g x g^T can only
    equal reference elements in its own trace bucket; buckets stay an
    order of magnitude smaller than the group.
    """

    def __init__(self, label: ClassLabel):
        elems = reference_group(label)
        traces = np.round(np.einsum("aii->a", elems), 6)
        uniq = np.unique(traces)
        ids = np.searchsorted(uniq, traces)
        width = int(np.bincount(ids).max())
        bucket = np.zeros((len(uniq), width, 9))
        valid = np.zeros((len(uniq), width), dtype=bool)
        fill = np.zeros(len(uniq), dtype=int)
        for e, b in zip(elems.reshape(-1, 9), ids):
            bucket[b, fill[b]] = e
            valid[b, fill[b]] = True
            fill[b] += 1
        self.label = label
        self.elems = elems
        self.trace_values = uniq
        self.bucket = bucket
        self.valid = valid

    def member_mask(self, cands: np.ndarray) -> np.ndarray:
        """Boolean mask over candidate matrices that lie in the group."""
        flat = cands.reshape(-1, 9)
        tr = flat[:, 0] + flat[:, 4] + flat[:, 8]
        idx = np.clip(
            np.searchsorted(self.trace_values, tr), 0, len(self.trace_values) - 1
        )
        lo = np.clip(idx - 1, 0, None)
        near_lo = np.abs(self.trace_values[lo] - tr) < np.abs(
            self.trace_values[idx] - tr
        )
        idx = np.where(near_lo, lo, idx)
        ok_trace = np.abs(self.trace_values[idx] - tr) < 1e-4
        dist = np.abs(self.bucket[idx] - flat[:, None, :]).max(axis=2)
        hit = ((dist < EPS_MAT) & self.valid[idx]).any(axis=1)
        return (hit & ok_trace).reshape(cands.shape[:-2])


@lru_cache(maxsize=None)
def _prepped(label: ClassLabel) -> _Prepped:
    return _Prepped(label)


def _pair_rng(c1: ClassLabel, c2: ClassLabel, seed: int) -> np.random.Generator:
    tag = f"{format_label(c1)}|{format_label(c2)}|{seed}".encode()
    return np.random.default_rng(zlib.crc32(tag))


def _candidate_axes(
    label: ClassLabel, rng: np.random.Generator
) -> list[tuple[np.ndarray, int]]:
    """Axis orbit representatives with the proper cyclic order about
    each, plus one seeded generic axis (order 1)."""
    elems = reference_group(label)
    proper = elems[np.linalg.det(elems) > 0]
    out = []
    for rep in axis_orbit_reps(label):
        m = 1
        for g in proper:
            if np.max(np.abs(g - IDENTITY)) < EPS_MAT:
                continue
            axis, _ = axis_angle(g)
            if abs(abs(float(np.dot(axis, rep))) - 1.0) < 1e-9:
                m += 1
        out.append((rep, m))
    generic = rng.normal(size=3)
    out.append((generic / np.linalg.norm(generic), 1))
    return out


def _perp_frame(b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    probe = np.array([1.0, 0.0, 0.0]) if abs(b[0]) < 0.9 else np.array(
        [0.0, 1.0, 0.0]
    )
    p = unit(np.cross(b, probe))
    return p, np.cross(b, p)


def _solved_angles(
    g0: np.ndarray,
    b: np.ndarray,
    all1: np.ndarray,
    all2: np.ndarray,
) -> np.ndarray:
    """Spin angles about b that carry some g0-image of an axis of H2
    onto an axis line of H1.  An intersection class with two or more
    distinct axis lines is only realized when a second pair of axes
    lines up, and the required azimuth need not be a rational multiple
    of pi, so these angles have to be solved for rather than swept."""
    p, q = _perp_frame(b)
    imgs = all2 @ g0.T
    alphas = []
    for v in (imgs, all1):
        perp = np.stack([v @ p, v @ q], axis=1)
        norms = np.linalg.norm(perp, axis=1)
        keep = perp[norms > 1e-9]
        alphas.append(np.arctan2(keep[:, 1], keep[:, 0]))
    if alphas[0].size == 0 or alphas[1].size == 0:
        return np.empty(0)
    diff = alphas[1][:, None] - alphas[0][None, :]
    return np.concatenate([diff.ravel(), diff.ravel() + np.pi])


def conjugators(c1: ClassLabel, c2: ClassLabel, seed: int = 0) -> np.ndarray:
    """Deterministic conjugator sweep for clips_oracle, shape (m, 3, 3).

    For an aligner g0 taking axis a (of H2, proper cyclic order m_a) to
    axis b (of H1, order m_b), composing with R(b, 2*pi/m_b) on the
    left or R(a, 2*pi/m_a) on the right leaves the intersection class
    unchanged (the right spin folds into a left one since g0 a = b), so
    spin angles only matter modulo 2*pi / lcm(m_a, m_b).  The sweep
    takes a grid of that size plus the solved secondary-axis angles.
    """
    rng = _pair_rng(c1, c2, seed)
    axes1 = _candidate_axes(c1, rng)
    axes2 = _candidate_axes(c2, rng)
    all1 = structural_axes(reference_group(c1))
    all2 = structural_axes(reference_group(c2))
    n_ang = 2 * math.lcm(_cyclic_param(c1), _cyclic_param(c2), 24)
    out = [IDENTITY[None]]
    for b, m_b in axes1:
        for a, m_a in axes2:
            period = 2.0 * np.pi / math.lcm(m_a, m_b)
            count = (2 * n_ang) // math.lcm(m_a, m_b)
            grid = np.arange(count) * (np.pi / n_ang)
            for target in (b, -b):
                g0 = align(a, target)
                solved = _solved_angles(g0, b, all1, all2) % period
                angles = np.concatenate([grid, solved])
                angles = np.unique(np.round(angles, 10))
                spins = np.array([rotation(b, t) for t in angles])
                out.append(np.einsum("kij,jl->kil", spins, g0))
    out.append(np.array([random_rotation(rng) for _ in range(N_RANDOM)]))
    return np.concatenate(out)


def clips_oracle(c1: ClassLabel, c2: ClassLabel, seed: int = 0) -> ClassSet:
    """Clips of two finite classes by exhaustive conjugation sweep.

    Parameters
    ----------
    c1, c2 : ClassLabel
        Finite classes with order <= 256.
    seed : int
        Seed for the generic axis and the random conjugations; the
        sweep itself is deterministic.

    Returns
    -------
    ClassSet
        All intersection classes found.
    """
    for c in (c1, c2):
        if not c.is_finite:
            raise ValueError(f"clips_oracle needs finite classes, got {c}")
        if order_of(c) > ORDER_CAP:
            raise ValueError(f"{c} exceeds the order cap {ORDER_CAP}")
    prep = _prepped(c1)
    g2 = reference_group(c2)
    found: dict[bytes, np.ndarray] = {}
    for chunk in _conjugator_chunks(c1, c2, seed):
        # h = g x g^T for every conjugator g and element x of G2
        conj = np.einsum("kij,xjl,kml->kxim", chunk, g2, chunk)
        masks = prep.member_mask(conj.reshape(-1, 3, 3)).reshape(len(chunk), len(g2))
        for m in np.unique(masks, axis=0):
            found.setdefault(m.tobytes(), m)
    classes = [recognize(g2[m]) for m in found.values()]
    return ClassSet(classes)


def _conjugator_chunks(c1: ClassLabel, c2: ClassLabel, seed: int):
    """Conjugator sweep in batches that keep the einsum buffers small."""
    all_g = conjugators(c1, c2, seed)
    step = max(1, int(2e6 // (9 * max(1, order_of(c2)))))
    for i in range(0, len(all_g), step):
        yield all_g[i : i + step]
