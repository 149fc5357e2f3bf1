import math

import numpy as np
import pytest

from o3clips.groups import (
    ORDER_CAP,
    PHI,
    GroupError,
    close_group,
    contains_element,
    generators,
    intersect,
    materialize,
    recognize,
    reference_group,
)
from o3clips.labels import (
    cyclic,
    cyclic_minus,
    dihedral,
    dihedral_d,
    dihedral_z,
    format_label,
    icosa,
    o2,
    octa,
    octa_minus,
    order_of,
    parse_label,
    so3,
    tetra,
    trivial,
    with_z2c,
)
from o3clips.rotations import random_rotation

AUDIT_LABELS = (
    ["1", "1+Z2c", "T", "O", "I", "O^-", "T+Z2c", "O+Z2c", "I+Z2c"]
    + [f"Z{n}" for n in range(2, 13)]
    + [f"D{n}" for n in range(2, 13)]
    + [f"Z{2*n}^-" for n in range(1, 9)]
    + [f"D{n}^z" for n in range(2, 9)]
    + [f"D{2*n}^d" for n in range(1, 9)]
    + [f"Z{n}+Z2c" for n in range(2, 9)]
    + [f"D{n}+Z2c" for n in range(2, 9)]
)


def _key(g: np.ndarray) -> bytes:
    # quantized integers: no -0.0/0.0 mismatch at the 1e-6 grid
    return np.round(g * 1e6).astype(np.int64).tobytes()


def _assert_is_group(elems: np.ndarray):
    k = len(elems)
    # identity present
    assert any(np.allclose(g, np.eye(3), atol=1e-9) for g in elems)
    # orthogonality
    for g in elems:
        assert np.allclose(g @ g.T, np.eye(3), atol=1e-9)
    keys = {_key(g) for g in elems}
    assert len(keys) == k
    prods = np.einsum("aij,bjk->abik", elems, elems).reshape(-1, 3, 3)
    for p in prods:
        assert _key(p) in keys
    for g in elems:
        assert _key(g.T) in keys


@pytest.mark.parametrize("text", AUDIT_LABELS)
def test_closure_audit(text):
    label = parse_label(text)
    elems = reference_group(label)
    assert len(elems) == order_of(label)
    _assert_is_group(elems)


def test_group_order_formulas():
    # n-fold cyclic and dihedral families, the three polyhedral groups,
    # the mirror families, and the +Z2c doubling.
    assert len(reference_group(cyclic(9))) == 9
    assert len(reference_group(dihedral(9))) == 18
    assert len(reference_group(tetra())) == 12
    assert len(reference_group(octa())) == 24
    assert len(reference_group(icosa())) == 60
    assert len(reference_group(cyclic_minus(10))) == 10
    assert len(reference_group(dihedral_z(7))) == 14
    assert len(reference_group(dihedral_d(10))) == 20
    assert len(reference_group(octa_minus())) == 24
    assert len(reference_group(with_z2c(icosa()))) == 120


def test_infinite_labels_raise():
    with pytest.raises(GroupError):
        generators(o2())
    with pytest.raises(GroupError):
        materialize(so3())


def test_phi_and_icosahedral_order_5():
    assert PHI == pytest.approx((1 + math.sqrt(5)) / 2)
    # A generator of the icosahedral group must have order 5; a wrong
    # golden ratio (e.g. (1 - sqrt 5)/2 or 1/phi) breaks this.
    orders = []
    for g in generators(icosa()):
        k, acc = 1, g.copy()
        while not np.allclose(acc, np.eye(3), atol=1e-9):
            acc = acc @ g
            k += 1
            assert k <= 10
        orders.append(k)
    assert 5 in orders
    # 24 rotations of order 5 in the full group (4 about each of 6 axes)
    traces = [np.trace(g) for g in reference_group(icosa())]
    five_fold = [t for t in traces
                 if abs(t - (1 + 2 * math.cos(2 * math.pi / 5))) < 1e-6
                 or abs(t - (1 + 2 * math.cos(4 * math.pi / 5))) < 1e-6]
    assert len(five_fold) == 24


def test_close_group_completes_generators():
    elems = close_group(generators(octa()))
    assert len(elems) == 24


def test_order_cap_guard():
    with pytest.raises(GroupError):
        materialize(cyclic(ORDER_CAP + 1))


def test_materialize_orientation_conjugates():
    rng = np.random.default_rng(3)
    g = random_rotation(rng)
    ref = materialize(dihedral(3))
    rot = materialize(dihedral(3), g)
    assert len(rot) == 6
    got = {_key(x) for x in rot}
    want = {_key(g @ x @ g.T) for x in ref}
    assert got == want


def test_intersect_reference_groups():
    t_in_o = intersect(reference_group(tetra()), reference_group(octa()))
    assert format_label(recognize(t_in_o)) == "T"
    z2_in_d2 = intersect(reference_group(cyclic(2)),
                         reference_group(dihedral(2)))
    assert format_label(recognize(z2_in_d2)) == "Z2"


def test_contains_element():
    elems = reference_group(tetra())
    assert contains_element(elems, np.eye(3))
    assert not contains_element(elems, -np.eye(3))


RECOG_SAMPLE = [
    "1", "1+Z2c", "Z2", "Z5", "D3", "T", "O", "I", "Z2^-", "Z6^-",
    "D4^z", "D8^d", "O^-", "Z3+Z2c", "D4+Z2c", "T+Z2c", "I+Z2c",
]


@pytest.mark.parametrize("text", RECOG_SAMPLE)
def test_recognize_round_trip(text):
    label = parse_label(text)
    assert recognize(materialize(label)) == label
    rng = np.random.default_rng(hash(text) % (2**32))
    for _ in range(3):
        g = random_rotation(rng)
        assert recognize(materialize(label, g)) == label


def test_recognize_reports_trivial():
    assert recognize(np.eye(3)[None]) == trivial()
