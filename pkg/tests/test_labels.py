import math

import pytest

from o3clips.labels import (
    ClassSet,
    canonicalize,
    class_set,
    compare,
    cyclic,
    cyclic_minus,
    dihedral,
    dihedral_d,
    dihedral_z,
    format_label,
    icosa,
    o2,
    o2_minus,
    o3,
    octa,
    octa_minus,
    order_of,
    parse_label,
    proper_part,
    so2,
    so3,
    sort_key,
    strip_z2c,
    tetra,
    tilde_part,
    trivial,
    with_z2c,
)

ROUND_TRIP = [
    "1", "Z2", "Z3", "Z12", "D2", "D3", "D8", "T", "O", "I",
    "Z2^-", "Z4^-", "Z16^-", "D2^z", "D3^z", "D8^z", "D4^d", "D12^d",
    "O^-", "O(2)^-", "SO(2)", "O(2)", "SO(3)", "O(3)",
    "1+Z2c", "Z2+Z2c", "Z7+Z2c", "D5+Z2c", "T+Z2c", "O+Z2c", "I+Z2c",
    "SO(2)+Z2c", "O(2)+Z2c",
]


@pytest.mark.parametrize("text", ROUND_TRIP)
def test_round_trip(text):
    assert format_label(parse_label(text)) == text


# Non-canonical spellings collapse to the canonical class.
COLLAPSES = [
    ("Z1", "1"),
    ("D1", "Z2"),
    ("D1^z", "Z2^-"),
    ("D2^d", "D2^z"),
    ("Z1+Z2c", "1+Z2c"),
    ("D1+Z2c", "Z2+Z2c"),
    ("SO(3)+Z2c", "O(3)"),
    (" Z 4 ^ - ", "Z4^-"),
    ("O(2) + Z2c", "O(2)+Z2c"),
]


@pytest.mark.parametrize("text,expected", COLLAPSES)
def test_canonical_collapse(text, expected):
    assert format_label(parse_label(text)) == expected


@pytest.mark.parametrize("bad", [
    "", "X4", "Z", "Z0", "D", "D0^z", "Z4^+", "D4^x", "SO(4)", "O(5)",
    "Z2+Z3c", "Z4^--", "Q8", "Z2+Z2c+Z2c", "-1",
])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_label(bad)


def test_factories_match_parse():
    assert cyclic(5) == parse_label("Z5")
    assert dihedral(5) == parse_label("D5")
    assert cyclic_minus(6) == parse_label("Z6^-")
    assert dihedral_z(6) == parse_label("D6^z")
    assert dihedral_d(6) == parse_label("D6^d")
    assert tetra() == parse_label("T")
    assert octa() == parse_label("O")
    assert icosa() == parse_label("I")
    assert octa_minus() == parse_label("O^-")
    assert o2_minus() == parse_label("O(2)^-")
    assert so2() == parse_label("SO(2)")
    assert o2() == parse_label("O(2)")
    assert so3() == parse_label("SO(3)")
    assert o3() == parse_label("O(3)")
    assert trivial() == parse_label("1")
    assert with_z2c(octa()) == parse_label("O+Z2c")


def test_factory_degenerate_parameters():
    assert cyclic(1) == trivial()
    assert dihedral(1) == cyclic(2)
    assert dihedral_z(1) == cyclic_minus(2)
    assert dihedral_d(2) == dihedral_z(2)
    with pytest.raises(ValueError):
        cyclic_minus(3)
    with pytest.raises(ValueError):
        cyclic_minus(0)
    with pytest.raises(ValueError):
        dihedral_d(3)


def test_with_z2c_rejects_type3():
    for lab in (cyclic_minus(4), dihedral_z(3), dihedral_d(4),
                octa_minus(), o2_minus()):
        with pytest.raises(ValueError):
            with_z2c(lab)


def test_orders():
    assert order_of(trivial()) == 1
    assert order_of(cyclic(7)) == 7
    assert order_of(dihedral(7)) == 14
    assert order_of(tetra()) == 12
    assert order_of(octa()) == 24
    assert order_of(icosa()) == 60
    assert order_of(cyclic_minus(8)) == 8
    assert order_of(dihedral_z(5)) == 10
    assert order_of(dihedral_d(8)) == 16
    assert order_of(octa_minus()) == 24
    assert order_of(with_z2c(icosa())) == 120
    assert order_of(with_z2c(trivial())) == 2
    for inf in (so2(), o2(), o2_minus(), so3(), o3(),
                with_z2c(so2()), with_z2c(o2())):
        assert math.isinf(order_of(inf))


def test_strip_and_parts():
    assert strip_z2c(with_z2c(dihedral(6))) == dihedral(6)
    assert strip_z2c(o3()) == so3()
    assert proper_part(cyclic_minus(8)) == cyclic(4)
    assert proper_part(dihedral_z(6)) == cyclic(6)
    assert proper_part(dihedral_d(8)) == dihedral(4)
    assert proper_part(octa_minus()) == tetra()
    assert proper_part(o2_minus()) == so2()
    assert tilde_part(cyclic_minus(8)) == cyclic(8)
    assert tilde_part(dihedral_z(6)) == dihedral(6)
    assert tilde_part(dihedral_d(8)) == dihedral(8)
    assert tilde_part(octa_minus()) == octa()
    assert tilde_part(o2_minus()) == o2()


def test_sort_order_finite_before_infinite():
    labels = class_set("O(3)", "SO(2)", "I", "1", "Z2^-", "D4^d",
                       "O(2)^-", "Z2", "T+Z2c").labels()
    assert labels[0] == "1"
    assert labels[-1] == "O(3)"
    finite = [x for x in labels if x in ("1", "Z2", "Z2^-", "D4^d", "I",
                                         "T+Z2c")]
    assert finite == ["1", "Z2", "Z2^-", "D4^d", "T+Z2c", "I"]
    assert labels.index("SO(2)") > labels.index("I")
    assert labels.index("O(2)^-") > labels.index("SO(2)")


def test_sort_key_total_on_sample():
    sample = [parse_label(t) for t in ROUND_TRIP]
    keys = [sort_key(lab) for lab in sample]
    assert len(set(keys)) == len(keys)


def test_compare():
    assert compare(cyclic(2), cyclic(2)) == 0
    assert compare(trivial(), cyclic(2)) == -1
    assert compare(o3(), cyclic(2)) == 1


def test_class_set_semantics():
    a = class_set("Z2", "1", "Z2", "D2^d")
    assert a.labels() == ["1", "Z2", "D2^z"]
    assert len(a) == 3
    assert parse_label("D2^z") in a
    assert parse_label("D4") not in a
    b = class_set("D2^z", "Z2", "1")
    assert a == b
    assert hash(a) == hash(b)
    union = a | class_set("O(3)")
    assert union.labels() == ["1", "Z2", "D2^z", "O(3)"]
    assert a == ClassSet(parse_label(t) for t in ("Z2", "1", "D2^d"))


def test_canonicalize_idempotent():
    for text in ROUND_TRIP:
        lab = parse_label(text)
        assert canonicalize(lab) == lab
