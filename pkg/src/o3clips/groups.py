"""Matrix realizations of the finite closed subgroups of O(3).

A label is materialized from a fixed generator list into the full
element set (shape (k, 3, 3)), kept in a deterministic lexicographic
order.  ``recognize`` inverts this: given any finite set of orthogonal
matrices forming a group, it returns the canonical class label, using
only the determinant split, the rotation axes and the element count.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .labels import (
    ClassLabel,
    cyclic,
    cyclic_minus,
    dihedral,
    dihedral_d,
    dihedral_z,
    icosa,
    octa,
    octa_minus,
    tetra,
    trivial,
    with_z2c,
)
from .rotations import (
    EPS_MAT,
    IDENTITY,
    axis_angle,
    canonical_axis,
    rotation,
    rotoreflection,
)

ORDER_CAP = 256       # largest materializable group
MIN_SEPARATION = 1e-2  # sanity floor on inter-element distance

PHI = (1.0 + np.sqrt(5.0)) / 2.0  # golden ratio, order-5 axes of I

E1 = np.array([1.0, 0.0, 0.0])
E2 = np.array([0.0, 1.0, 0.0])
E3 = np.array([0.0, 0.0, 1.0])


class GroupError(ValueError):
    pass


def generators(label: ClassLabel) -> list[np.ndarray]:
    """Generator matrices of a finite class in reference orientation."""
    if not label.is_finite:
        raise GroupError(f"{label} is infinite and has no finite generator set")
    kind, n = label.kind, label.n
    gens: list[np.ndarray]
    match kind:
        case "1":
            gens = []
        case "Z":
            gens = [rotation(E3, 2 * np.pi / n)]
        case "D":
            gens = [rotation(E3, 2 * np.pi / n), rotation(E1, np.pi)]
        case "T":
            gens = [
                rotation(E3, np.pi),
                rotation(E1, np.pi),
                rotation(E1 + E2 + E3, 2 * np.pi / 3),
            ]
        case "O":
            gens = [
                rotation(E3, np.pi / 2),
                rotation(E1, np.pi),
                rotation(E1 + E2 + E3, 2 * np.pi / 3),
            ]
        case "I":
            gens = [
                rotation(E3, np.pi),
                rotation(E1 + E2 + E3, 2 * np.pi / 3),
                rotation(E1 + PHI * E3, 2 * np.pi / 5),
            ]
        case "Z-":
            # order n with subscript n even; -R(e3, 2*pi/n) generates it
            gens = [rotoreflection(E3, 2 * np.pi / n)]
        case "Dz":
            gens = [rotation(E3, 2 * np.pi / n), rotoreflection(E1, np.pi)]
        case "Dd":
            gens = [rotoreflection(E3, 2 * np.pi / n), rotation(E1, np.pi)]
        case "O-":
            gens = [
                rotoreflection(E3, np.pi / 2),
                rotoreflection(E2 - E3, np.pi),
            ]
        case _:
            raise GroupError(f"no generator table for {label}")
    if label.plus:
        gens = gens + [-IDENTITY]
    return gens


def lexsort_elements(mats: np.ndarray) -> np.ndarray:
    """Deduplicate matrices (entrywise within EPS_MAT) and return them
    in lexicographic order of their flattened entries.

    Distinct group elements are separated by at least MIN_SEPARATION
    while numerical copies agree to ~1e-12, so a coarse rounding pass
    can only split copies across a grid boundary, never merge distinct
    elements; the exact tolerance scan re-merges the splits.
    """
    flat = mats.reshape(-1, 9)
    _, first = np.unique(np.round(flat, 6), axis=0, return_index=True)
    flat = flat[np.sort(first)]
    keep: list[int] = []
    for i in range(len(flat)):
        if keep and np.abs(flat[keep] - flat[i]).max(axis=1).min() < EPS_MAT:
            continue
        keep.append(i)
    flat = flat[keep]
    order = np.lexsort(flat.T[::-1])
    return flat[order].reshape(-1, 3, 3)


def close_group(gens: list[np.ndarray], cap: int = ORDER_CAP) -> np.ndarray:
    """Close a generator list under multiplication.

    Raises
    ------
    GroupError
        If the closure exceeds ``cap`` elements (in particular for
        generator sets of infinite groups).
    """
    elems = lexsort_elements(np.array([IDENTITY, *gens]))
    while True:
        prods = np.einsum("aij,bjk->abik", elems, elems).reshape(-1, 3, 3)
        new = lexsort_elements(np.concatenate([elems, prods]))
        if len(new) > cap:
            raise GroupError(f"group closure exceeds cap {cap}")
        if len(new) == len(elems):
            break
        elems = new
    _check_separation(elems)
    return elems


def _check_separation(elems: np.ndarray) -> None:
    if len(elems) < 2:
        return
    flat = elems.reshape(len(elems), 9)
    diff = np.abs(flat[:, None, :] - flat[None, :, :]).max(axis=2)
    np.fill_diagonal(diff, np.inf)
    if diff.min() < MIN_SEPARATION:
        raise GroupError(
            f"degenerate element set: min separation {diff.min():.3e}"
        )


@lru_cache(maxsize=None)
def reference_group(label: ClassLabel) -> np.ndarray:
    """Cached element set of a finite class in reference orientation."""
    elems = close_group(generators(label))
    elems.flags.writeable = False
    return elems


def materialize(label: ClassLabel, orientation: np.ndarray | None = None) -> np.ndarray:
    """Element set of a finite class, optionally conjugated.

    Parameters
    ----------
    label : ClassLabel
        A finite class (order <= 256).  Infinite classes raise
        ``GroupError``; their clips are handled by closed-form rules.
    orientation : (3, 3) array, optional
        Conjugating rotation g; the result is g G g^T in canonical
        element order.
    """
    elems = reference_group(label)
    if orientation is None:
        return elems
    g = np.asarray(orientation, dtype=float)
    return lexsort_elements(np.einsum("ij,ajk,lk->ail", g, elems, g))


def intersect(g1: np.ndarray, g2: np.ndarray) -> np.ndarray:
    """Common elements of two materialized groups (subset of ``g2``)."""
    f1 = g1.reshape(len(g1), 9)
    f2 = g2.reshape(len(g2), 9)
    dist = np.abs(f1[:, None, :] - f2[None, :, :]).max(axis=2)
    mask = (dist < EPS_MAT).any(axis=0)
    return g2[mask]


def contains_element(group: np.ndarray, g: np.ndarray) -> bool:
    return bool(
        (np.abs(group - g[None]).reshape(len(group), 9).max(axis=1) < EPS_MAT).any()
    )


def structural_axes(elems: np.ndarray) -> np.ndarray:
    """Unsigned axes of all non-central elements.

    Proper rotations contribute their rotation axis; improper elements
    contribute the axis of -g (the reflection normal for g = -R(v, pi)).
    """
    axes: list[np.ndarray] = []
    for g in elems:
        h = g if np.linalg.det(g) > 0 else -g
        if np.max(np.abs(h - IDENTITY)) < EPS_MAT:
            continue
        axis, _ = axis_angle(h)
        axes.append(canonical_axis(axis))
    if not axes:
        return np.zeros((0, 3))
    return _dedupe_axes(np.array(axes))


def _dedupe_axes(axes: np.ndarray, tol: float = 1e-6) -> np.ndarray:
    out: list[np.ndarray] = []
    for a in axes:
        if not any(np.linalg.norm(a - b) < tol for b in out):
            out.append(a)
    return np.array(out)


def axis_orbit_reps(label: ClassLabel) -> np.ndarray:
    """One representative per orbit of structural axes under the group's
    own action (conjugation moves axes within an orbit, so clips only
    depends on the orbit)."""
    elems = reference_group(label)
    axes = structural_axes(elems)
    if len(axes) == 0:
        return axes
    parent = list(range(len(axes)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in elems:
        mapped = axes @ g.T
        for i, m in enumerate(mapped):
            m = canonical_axis(m)
            dist = np.linalg.norm(axes - m[None], axis=1)
            j = int(np.argmin(dist))
            if dist[j] < 1e-6:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    reps = []
    seen = set()
    for i in range(len(axes)):
        r = find(i)
        if r not in seen:
            seen.add(r)
            reps.append(axes[i])
    return np.array(reps)


class RecognitionError(ValueError):
    pass


def _axis_census(proper: np.ndarray) -> dict[bytes, int]:
    """Map each unique rotation axis to the cyclic order about it."""
    buckets: list[tuple[np.ndarray, int]] = []
    for g in proper:
        if np.max(np.abs(g - IDENTITY)) < EPS_MAT:
            continue
        axis, _ = axis_angle(g)
        axis = canonical_axis(axis)
        for idx, (a, _) in enumerate(buckets):
            if np.linalg.norm(a - axis) < 1e-6:
                buckets[idx] = (a, buckets[idx][1] + 1)
                break
        else:
            buckets.append((axis, 1))
    return {a.tobytes(): count + 1 for a, count in buckets}


def recognize_so3(proper: np.ndarray) -> ClassLabel:
    """Canonical class of a finite rotation group."""
    k = len(proper)
    if k == 1:
        return trivial()
    census = _axis_census(proper)
    orders = sorted(census.values(), reverse=True)
    if len(census) == 1:
        if orders[0] != k:
            raise RecognitionError(f"cyclic census mismatch: {orders} vs {k}")
        return cyclic(k)
    if k == 12 and sum(1 for m in orders if m == 3) == 4:
        return tetra()
    if k == 24 and sum(1 for m in orders if m == 4) == 3:
        return octa()
    if k == 60 and sum(1 for m in orders if m == 5) == 6:
        return icosa()
    n = k // 2
    if 2 * n != k or orders[0] != n or any(m != 2 for m in orders[1:] if m != n):
        raise RecognitionError(f"unrecognized rotation group: order {k}, axes {orders}")
    return dihedral(n)


def recognize(elems: np.ndarray) -> ClassLabel:
    """Canonical class label of a finite subgroup of O(3).

    The determinant splits the group; a type III group is identified by
    the pair (recognize(proper + negated improper), recognize(proper)).
    """
    dets = np.linalg.det(elems)
    proper = elems[dets > 0]
    improper = elems[dets < 0]
    if len(improper) == 0:
        return recognize_so3(proper)
    minus_id = -IDENTITY
    if any(np.max(np.abs(g - minus_id)) < EPS_MAT for g in improper):
        return with_z2c(recognize_so3(proper))
    tilde = lexsort_elements(np.concatenate([proper, -improper]))
    t = recognize_so3(tilde)
    p = recognize_so3(proper)
    match (t.kind, p.kind):
        case ("Z", "1") if t.n == 2:
            return cyclic_minus(2)
        case ("Z", "Z") if t.n == 2 * p.n:
            return cyclic_minus(t.n)
        case ("D", "Z") if t.n == p.n:
            return dihedral_z(t.n)
        case ("D", "D") if t.n == 2 * p.n:
            return dihedral_d(t.n)
        case ("O", "T"):
            return octa_minus()
    raise RecognitionError(f"unrecognized improper group: tilde {t}, proper {p}")
