import itertools

import pytest

from o3clips import engine, infinite, tables
from o3clips.engine import (
    ClipsMismatch,
    class_leq,
    clips,
    clips_families,
    verify_cells,
)
from o3clips.labels import (
    ClassSet,
    class_set,
    cyclic,
    dihedral,
    order_of,
    parse_label,
    with_z2c,
)


def test_accepts_strings_and_labels():
    a, b = parse_label("Z2"), parse_label("D4")
    assert clips("Z2", "D4") == clips(a, b)
    assert clips("Z2", b) == clips(a, "D4")


def test_invalid_method():
    with pytest.raises(ValueError):
        clips("Z2", "Z2", method="fast")


def test_oracle_method_needs_finite():
    with pytest.raises(ValueError):
        clips("Z2", "SO(2)", method="oracle")


def test_symmetry_spot():
    pairs = [("Z4", "D6"), ("T", "O^-"), ("Z4^-", "O+Z2c"),
             ("O(2)", "D8"), ("SO(2)+Z2c", "D6^d"), ("O(2)^-", "I")]
    for a, b in pairs:
        assert clips(a, b) == clips(b, a)


def test_inversion_strip_identity():
    # a +Z2c factor is invisible to a plain rotation group
    for h1, h2 in [("Z6", "D4"), ("D3", "O"), ("Z5", "I"), ("T", "T")]:
        assert clips(h1, f"{h2}+Z2c") == clips(h1, h2)


def test_type3_proper_part_identity():
    # a mirror-type group meets a rotation group in its rotation part
    assert clips("Z8^-", "D6") == clips("Z4", "D6")
    assert clips("D4^z", "O") == clips("Z4", "O")
    assert clips("D8^d", "T") == clips("D4", "T")
    assert clips("O^-", "I") == clips("T", "I")


def test_type2_pairs_factor_through_rotation_parts():
    for h1, h2 in [("Z4", "D6"), ("D2", "D2"), ("T", "D3")]:
        inner = clips(h1, h2)
        outer = clips(f"{h1}+Z2c", f"{h2}+Z2c")
        assert outer == ClassSet(with_z2c(x) for x in inner)


def test_both_method_agrees_on_sample():
    pairs = [("Z4", "Z6"), ("D4", "D6"), ("T", "O"), ("O", "I"),
             ("Z4^-", "D4"), ("D6^d", "O^-"), ("Z6+Z2c", "D4^z"),
             ("T+Z2c", "I+Z2c")]
    for a, b in pairs:
        assert clips(a, b, method="both") == clips(a, b)


def test_both_method_raises_on_planted_mismatch(monkeypatch):
    wrong = class_set("1", "I")

    def lying_cell(row, col):
        return "planted", wrong

    # the closed-form cell is imported into both namespaces
    monkeypatch.setattr(tables, "clips_type2_type3", lying_cell)
    monkeypatch.setattr(infinite, "clips_type2_type3", lying_cell)
    with pytest.raises(ClipsMismatch) as err:
        clips("Z4+Z2c", "D4^z", method="both")
    assert err.value.symbolic == wrong
    assert "symbolic" in str(err.value)


def test_clips_families_is_pairwise_union():
    fam1 = ["Z2", "Z3"]
    fam2 = ["D2", "D3"]
    want = ClassSet()
    for a, b in itertools.product(fam1, fam2):
        want = want | clips(a, b)
    assert clips_families(fam1, fam2) == want


def test_clips_families_accepts_classsets():
    cs1 = class_set("Z2", "Z3")
    cs2 = class_set("D2", "D3")
    assert clips_families(cs1, cs2) == clips_families(["Z2", "Z3"],
                                                      ["D2", "D3"])


LEQ_TRUE = [
    ("1", "1"), ("1", "Z5"), ("1", "O(3)"), ("1", "SO(2)"),
    ("Z2", "D2"), ("Z3", "Z6"), ("Z4", "D4"), ("Z5", "I"),
    ("D2", "T"), ("D2", "O"), ("T", "O"), ("T", "I"), ("D5", "I"),
    ("Z2", "SO(2)"), ("Z9", "SO(2)"), ("D7", "O(2)"), ("SO(2)", "O(2)"),
    ("Z2", "SO(3)"), ("O(2)", "SO(3)"), ("I", "SO(3)"), ("T", "I+Z2c"),
    ("Z2^-", "D2^z"), ("Z2^-", "O^-"), ("Z4^-", "D4^d"),
    ("D2^z", "D4^z"), ("D3^z", "O^-"), ("D2^z", "O^-"),
    ("Z6^-", "SO(2)+Z2c"), ("Z8", "SO(2)+Z2c"), ("SO(2)", "SO(2)+Z2c"),
    ("D8^d", "O(2)+Z2c"), ("O(2)^-", "O(2)+Z2c"), ("O(2)", "O(2)+Z2c"),
    ("Z2^-", "O(2)^-"), ("D5^z", "O(2)^-"), ("SO(2)", "O(2)^-"),
    ("Z7", "O(2)^-"), ("Z3", "O(2)^-"), ("Z4^-", "O^-"),
    ("1+Z2c", "Z4+Z2c"), ("Z3+Z2c", "D3+Z2c"),
    ("T+Z2c", "O+Z2c"), ("O^-", "O(3)"), ("O(2)+Z2c", "O(3)"),
    ("SO(3)", "O(3)"), ("D4^z", "D8^z"), ("Z4", "D8^z"),
]

LEQ_FALSE = [
    ("Z5", "Z7"), ("Z4", "T"), ("O", "I"), ("D4", "I"), ("I", "O"),
    ("SO(2)", "Z8"), ("O(2)", "SO(2)"), ("SO(3)", "O(2)"),
    ("1+Z2c", "Z5"), ("1+Z2c", "SO(2)"), ("Z2+Z2c", "O^-"),
    ("D4^d", "D8^d"), ("Z4", "D4^d"), ("Z2^-", "Z4^-"),
    ("Z4^-", "D4^z"),
    ("D2", "O(2)^-"), ("O^-", "O(2)^-"), ("Z2^-", "SO(2)"),
    ("T", "D8"), ("O(3)", "SO(3)"), ("O(2)^-", "SO(2)+Z2c"),
    ("D3", "SO(2)+Z2c"), ("T+Z2c", "I"),
]


@pytest.mark.parametrize("a,b", LEQ_TRUE)
def test_class_leq_true(a, b):
    assert class_leq(a, b)


@pytest.mark.parametrize("a,b", LEQ_FALSE)
def test_class_leq_false(a, b):
    assert not class_leq(a, b)


def test_leq_consistent_with_self_clips():
    # finite a is below finite b exactly when a survives in clips(a, b)
    pool = (["1", "Z2", "Z3", "Z4", "Z6", "D2", "D3", "T", "O", "I",
             "Z2^-", "Z4^-", "D2^z", "D3^z", "D4^d", "O^-",
             "1+Z2c", "Z2+Z2c", "D2+Z2c", "T+Z2c"])
    for a in pool:
        for b in pool:
            la, lb = parse_label(a), parse_label(b)
            assert class_leq(la, lb) == (la in clips(la, lb)), (a, b)


def test_leq_antisymmetric_on_pool():
    pool = ["1", "Z2", "Z4", "D2", "T", "O", "Z2^-", "D2^z", "D4^d",
            "O^-", "Z2+Z2c", "SO(2)", "O(2)", "O(2)^-", "O(3)"]
    for a in pool:
        for b in pool:
            if a != b and class_leq(a, b) and class_leq(b, a):
                raise AssertionError(f"{a} and {b} mutually below")


def test_verify_cells_small_grid_all_match():
    checks = list(verify_cells(n_max=2, m_max=3, seed=1))
    assert len(checks) == 7 * 7
    assert all(c.match for c in checks)


def test_dominance_on_small_cells():
    for a, b in [("D4", "O"), ("Z6+Z2c", "D4^z"), ("O^-", "T+Z2c")]:
        cell = clips(a, b)
        for x in cell:
            assert class_leq(x, parse_label(a))
            assert class_leq(x, parse_label(b))


def test_order_divisibility_on_small_cells():
    for a, b in [("D4", "O"), ("T", "I"), ("D6^d", "O+Z2c")]:
        na, nb = order_of(parse_label(a)), order_of(parse_label(b))
        for x in clips(a, b):
            k = order_of(x)
            assert na % k == 0 and nb % k == 0


def test_memoization_stability():
    first = clips("D6", "O")
    again = clips("D6", "O")
    assert first == again
    assert first is again  # cached ClassSet comes back identical
