"""Conjugacy class labels for closed subgroups of O(3).

A closed subgroup of O(3) falls into one of three types:

* type I: subgroups of SO(3), up to conjugacy one of
  1, Z_n (n >= 2), D_n (n >= 2), T, O, I, SO(2), O(2), SO(3);
* type II: groups containing -Id, all of the form H (+) Z2c with H of
  type I and Z2c = {+Id, -Id};
* type III: groups containing improper elements but not -Id, up to
  conjugacy one of Z_{2n}^-, D_n^z, D_{2n}^d, O^-, O(2)^-.

This module defines the label algebra only: parsing, formatting,
canonicalization, group orders and a deterministic total order used to
present sets of classes.  Matrix realizations live in ``groups``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

# Label kinds.  'Z-' stores the printed subscript (an even number, the
# group order), as do 'Dz' and 'Dd'.  'Dd' subscripts are even and the
# group order is twice the subscript.
KINDS_I = ("1", "Z", "D", "T", "O", "I", "SO2", "O2", "SO3")
KINDS_III = ("Z-", "Dz", "Dd", "O-", "O2-")
INFINITE_KINDS = frozenset({"SO2", "O2", "SO3", "O2-"})

_FAMILY_RANK = {
    "1": 0, "Z": 1, "D": 2, "T": 3, "O": 4, "I": 5,
    "Z-": 6, "Dz": 7, "Dd": 8, "O-": 9,
}

# Fixed presentation order for infinite classes.
_INFINITE_SEQ = (
    ("SO2", False), ("O2", False), ("SO2", True), ("O2", True),
    ("O2-", False), ("SO3", False), ("SO3", True),
)


@dataclass(frozen=True, order=False)
class ClassLabel:
    """Canonical conjugacy class label.

    Attributes
    ----------
    kind : str
        Family tag, one of ``KINDS_I`` or ``KINDS_III``.
    n : int
        Printed subscript for parametric families, 0 otherwise.
    plus : bool
        True for type II labels H (+) Z2c.  Only valid on type I kinds;
        ``SO3`` with ``plus`` displays as ``O(3)``.
    """

    kind: str
    n: int = 0
    plus: bool = False

    def __str__(self) -> str:
        return format_label(self)

    def __repr__(self) -> str:
        return f"ClassLabel({format_label(self)!r})"

    @property
    def is_finite(self) -> bool:
        return self.kind not in INFINITE_KINDS

    @property
    def type(self) -> str:
        """Classification tag: 'I', 'II' or 'III'."""
        if self.plus:
            return "II"
        return "III" if self.kind in KINDS_III else "I"

    @property
    def order(self) -> float:
        return order_of(self)


def _base(kind: str, n: int = 0) -> ClassLabel:
    return ClassLabel(kind, n, False)


def trivial() -> ClassLabel:
    return _base("1")


def cyclic(n: int) -> ClassLabel:
    if n < 1:
        raise ValueError(f"Z_{n} is not a group")
    return trivial() if n == 1 else _base("Z", n)


def dihedral(n: int) -> ClassLabel:
    if n < 1:
        raise ValueError(f"D_{n} is not a group")
    return cyclic(2) if n == 1 else _base("D", n)


def tetra() -> ClassLabel:
    return _base("T")


def octa() -> ClassLabel:
    return _base("O")


def icosa() -> ClassLabel:
    return _base("I")


def so2() -> ClassLabel:
    return _base("SO2")


def o2() -> ClassLabel:
    return _base("O2")


def so3() -> ClassLabel:
    return _base("SO3")


def o3() -> ClassLabel:
    return ClassLabel("SO3", 0, True)


def cyclic_minus(k: int) -> ClassLabel:
    # Z_k^-: order k, proper part Z_{k/2}; the subscript is even.
    if k < 2 or k % 2:
        raise ValueError(f"Z_{k}^- is not a group (even subscript >= 2 required)")
    return _base("Z-", k)


def dihedral_z(n: int) -> ClassLabel:
    # D_n^z: order 2n, proper part Z_n.  D_1^z degenerates to Z_2^-.
    if n < 1:
        raise ValueError(f"D_{n}^z is not a group")
    return cyclic_minus(2) if n == 1 else _base("Dz", n)


def dihedral_d(k: int) -> ClassLabel:
    # D_k^d: order 2k, proper part D_{k/2}; subscript k is even.
    # D_2^d is conjugate to D_2^z, the z spelling is canonical.
    if k < 2 or k % 2:
        raise ValueError(f"D_{k}^d is not a group (even subscript >= 2 required)")
    return dihedral_z(2) if k == 2 else _base("Dd", k)


def octa_minus() -> ClassLabel:
    return _base("O-")


def o2_minus() -> ClassLabel:
    return _base("O2-")


def with_z2c(label: ClassLabel) -> ClassLabel:
    """The type II class H (+) Z2c for a type I class H."""
    if label.plus:
        return label
    if label.kind in KINDS_III:
        raise ValueError(f"{label} already contains improper elements")
    return ClassLabel(label.kind, label.n, True)


def strip_z2c(label: ClassLabel) -> ClassLabel:
    """The type I part H of a type II class H (+) Z2c."""
    return ClassLabel(label.kind, label.n, False) if label.plus else label


def proper_part(label: ClassLabel) -> ClassLabel:
    """Class of the intersection with SO(3) (the determinant +1 part)."""
    if label.plus:
        return strip_z2c(label)
    match label.kind:
        case "Z-":
            return cyclic(label.n // 2)
        case "Dz":
            return cyclic(label.n)
        case "Dd":
            return dihedral(label.n // 2)
        case "O-":
            return tetra()
        case "O2-":
            return so2()
    return label


def tilde_part(label: ClassLabel) -> ClassLabel:
    """For a type III class, the rotation group obtained by negating the
    improper half; identity on type I / II labels."""
    if label.plus:
        return label
    match label.kind:
        case "Z-":
            return cyclic(label.n)
        case "Dz" | "Dd":
            return dihedral(label.n)
        case "O-":
            return octa()
        case "O2-":
            return o2()
    return label


def order_of(label: ClassLabel) -> float:
    """Group order; ``math.inf`` for the continuous classes."""
    if label.kind in INFINITE_KINDS:
        return math.inf
    base = {
        "1": 1, "T": 12, "O": 24, "I": 60, "O-": 24,
    }.get(label.kind)
    if base is None:
        base = {
            "Z": label.n, "D": 2 * label.n,
            "Z-": label.n, "Dz": 2 * label.n, "Dd": 2 * label.n,
        }[label.kind]
    return base * 2 if label.plus else base


def sort_key(label: ClassLabel) -> tuple:
    """Deterministic total order: finite classes by (order, family, n),
    then the infinite ones in a fixed sequence."""
    if label.kind in INFINITE_KINDS:
        return (1, _INFINITE_SEQ.index((label.kind, label.plus)), 0, 0)
    rank = _FAMILY_RANK[label.kind] + (20 if label.plus else 0)
    return (0, order_of(label), rank, label.n)


def compare(a: ClassLabel, b: ClassLabel) -> int:
    ka, kb = sort_key(a), sort_key(b)
    return (ka > kb) - (ka < kb)


_FIXED_FORMS = {
    "1": "1", "T": "T", "O": "O", "I": "I",
    "SO2": "SO(2)", "O2": "O(2)", "SO3": "SO(3)",
    "O-": "O^-", "O2-": "O(2)^-",
}


def format_label(label: ClassLabel) -> str:
    """Canonical ASCII spelling of a class label."""
    kind, n = label.kind, label.n
    if kind in _FIXED_FORMS:
        base = _FIXED_FORMS[kind]
    elif kind == "Z":
        base = f"Z{n}"
    elif kind == "D":
        base = f"D{n}"
    elif kind == "Z-":
        base = f"Z{n}^-"
    elif kind == "Dz":
        base = f"D{n}^z"
    elif kind == "Dd":
        base = f"D{n}^d"
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if not label.plus:
        return base
    if kind == "SO3":
        return "O(3)"
    return base + "+Z2c"


_LABEL_RE = re.compile(
    r"""^(?:
        (?P<one>1) |
        (?P<plain>T|O|I) |
        (?P<inf>SO\(2\)|O\(2\)|SO\(3\)|O\(3\)) |
        O\^- (?P<ominus>) |
        O\(2\)\^- (?P<o2minus>) |
        Z(?P<zn>\d+) (?P<zmin>\^-)? |
        D(?P<dn>\d+) (?P<dsuf>\^[zd])?
    )$""",
    re.VERBOSE,
)


def parse_label(text: str) -> ClassLabel:
    """Parse an ASCII class label and return its canonical form.

    Parameters
    ----------
    text : str
        A spelling such as ``"D4"``, ``"Z6^-"``, ``"O(2)^-"`` or
        ``"D3+Z2c"``.  ``"+Z2c"`` marks the type II classes; ``"O(3)"``
        abbreviates ``SO(3)+Z2c``.

    Returns
    -------
    ClassLabel
        Canonical label; degenerate spellings collapse (``Z1`` to ``1``,
        ``D1`` to ``Z2``, ``D1^z`` to ``Z2^-``, ``D2^d`` to ``D2^z``).
    """
    s = text.strip().replace(" ", "")
    plus = False
    if s.endswith("+Z2c"):
        plus = True
        s = s[: -len("+Z2c")]
    m = _LABEL_RE.match(s)
    if not m:
        raise ValueError(f"cannot parse class label {text!r}")
    if m.group("one") is not None:
        label = trivial()
    elif m.group("plain") is not None:
        label = {"T": tetra, "O": octa, "I": icosa}[m.group("plain")]()
    elif m.group("inf") is not None:
        label = {
            "SO(2)": so2, "O(2)": o2, "SO(3)": so3, "O(3)": o3,
        }[m.group("inf")]()
    elif m.group("ominus") is not None:
        label = octa_minus()
    elif m.group("o2minus") is not None:
        label = o2_minus()
    elif m.group("zn") is not None:
        n = int(m.group("zn"))
        label = cyclic_minus(n) if m.group("zmin") else cyclic(n)
    else:
        n = int(m.group("dn"))
        suf = m.group("dsuf")
        if suf == "^z":
            label = dihedral_z(n)
        elif suf == "^d":
            label = dihedral_d(n)
        else:
            label = dihedral(n)
    if plus:
        if label.plus:
            raise ValueError(f"{text!r}: +Z2c applied twice")
        label = with_z2c(label)
    return label


def canonicalize(label: ClassLabel) -> ClassLabel:
    """Re-canonicalize a label built by hand (collapses degenerate n)."""
    if label.kind in ("T", "O", "I", "SO2", "O2", "SO3", "O-", "O2-", "1"):
        out = _base(label.kind)
    else:
        builder = {
            "Z": cyclic, "D": dihedral,
            "Z-": cyclic_minus, "Dz": dihedral_z, "Dd": dihedral_d,
        }[label.kind]
        out = builder(label.n)
    return with_z2c(out) if label.plus else out


class ClassSet:
    """Immutable, canonically sorted set of class labels."""

    __slots__ = ("_items",)

    def __init__(self, items: Iterable[ClassLabel] = ()):
        seen = {}
        for it in items:
            lab = canonicalize(it)
            seen[lab] = None
        object.__setattr__(
            self, "_items", tuple(sorted(seen, key=sort_key))
        )

    def __iter__(self) -> Iterator[ClassLabel]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, label: ClassLabel) -> bool:
        return canonicalize(label) in self._items

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassSet) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __or__(self, other: "ClassSet") -> "ClassSet":
        return ClassSet((*self._items, *other._items))

    def __repr__(self) -> str:
        return "{" + ", ".join(str(i) for i in self._items) + "}"

    def labels(self) -> list[str]:
        return [format_label(i) for i in self._items]


def class_set(*specs: str | ClassLabel) -> ClassSet:
    """Build a ClassSet from labels or their spellings."""
    return ClassSet(
        parse_label(s) if isinstance(s, str) else s for s in specs
    )
