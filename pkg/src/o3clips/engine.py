"""One product, three routes: closed form, brute force, or both.

``clips`` is the public entry point for the conjugacy-class intersection
product on closed subgroups of O(3).  The symbolic route applies the exact
reductions and closed-form tables whenever at least one class is infinite,
and otherwise peels off exact simplifications (dropping a central inversion
against a rotation group, replacing a mixed-type group by its rotation part
against a rotation group) before handing the remaining finite pair to the
matrix oracle.  The oracle route forces the brute-force computation and is
therefore restricted to pairs of finite classes.  The "both" route returns
the symbolic answer after cross-checking it against the oracle whenever the
pair is finite, raising ``ClipsMismatch`` on disagreement.

``class_leq`` decides the containment-up-to-conjugacy partial order, and
``clips_families`` extends the product to unions of classes memberwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .axial import clips_axial
from .infinite import clips_reduce, is_infinite, typeclass
from .labels import (
    ClassLabel,
    ClassSet,
    canonicalize,
    cyclic,
    cyclic_minus,
    dihedral,
    dihedral_d,
    dihedral_z,
    format_label,
    icosa,
    o2_minus,
    octa,
    octa_minus,
    parse_label,
    proper_part,
    so2,
    strip_z2c,
    tetra,
    with_z2c,
)
from .oracle import clips_oracle

__all__ = [
    "CellCheck",
    "ClipsMismatch",
    "class_leq",
    "clips",
    "clips_families",
    "verify_cells",
]

_METHODS = ("symbolic", "oracle", "both")


class ClipsMismatch(Exception):
    """Closed form and brute force disagree on a pair of classes."""

    def __init__(self, lhs: ClassLabel, rhs: ClassLabel,
                 symbolic: ClassSet, oracle: ClassSet):
        self.lhs = lhs
        self.rhs = rhs
        self.symbolic = symbolic
        self.oracle = oracle
        super().__init__(
            f"clips({format_label(lhs)}, {format_label(rhs)}): symbolic "
            f"{symbolic.labels()} != oracle {oracle.labels()}"
        )


def _as_label(spec: str | ClassLabel) -> ClassLabel:
    return canonicalize(parse_label(spec) if isinstance(spec, str) else spec)


@lru_cache(maxsize=None)
def _oracle_after_strips(a: ClassLabel, b: ClassLabel, seed: int) -> ClassSet:
    # Exact simplifications before brute force: a central inversion on one
    # side is invisible to a rotation group on the other, and a mixed-type
    # group meets a rotation group only through its rotation part.
    if typeclass(a) == "II":
        a = strip_z2c(a)
    if typeclass(b) == "II":
        b = strip_z2c(b)
    if typeclass(a) == "III" and typeclass(b) == "I":
        a = proper_part(a)
    elif typeclass(b) == "III" and typeclass(a) == "I":
        b = proper_part(b)
    return clips_oracle(a, b, seed=seed)


def clips(c1: str | ClassLabel, c2: str | ClassLabel,
          method: str = "symbolic", seed: int = 0) -> ClassSet:
    """Set of classes of intersections of c1 with all conjugates of c2."""
    if method not in _METHODS:
        raise ValueError(f"method must be one of {_METHODS}, got {method!r}")
    a, b = _as_label(c1), _as_label(c2)

    if method == "oracle":
        for lab in (a, b):
            if is_infinite(lab):
                raise ValueError(
                    f"oracle method needs finite classes, got "
                    f"{format_label(lab)}"
                )
        return clips_oracle(a, b, seed=seed)

    if method == "both":
        sym = clips(a, b, method="symbolic", seed=seed)
        if not (is_infinite(a) or is_infinite(b)):
            orc = clips_oracle(a, b, seed=seed)
            if sym != orc:
                raise ClipsMismatch(a, b, sym, orc)
        return sym

    reduced = clips_reduce(a, b)
    if reduced is not None:
        return reduced
    # Both classes finite from here on.
    if typeclass(a) == "II" and typeclass(b) == "II":
        inner = clips(strip_z2c(a), strip_z2c(b), method="symbolic",
                      seed=seed)
        return ClassSet(with_z2c(k) for k in inner)
    return _oracle_after_strips(a, b, seed)


def clips_families(fam1: Iterable[str | ClassLabel],
                   fam2: Iterable[str | ClassLabel],
                   method: str = "symbolic", seed: int = 0) -> ClassSet:
    """Union of pairwise clips; the symmetry classes of a pair of tensors
    run over exactly this set when each factor runs over its own family."""
    left = [_as_label(c) for c in fam1]
    right = [_as_label(c) for c in fam2]
    out = ClassSet()
    for a in left:
        for b in right:
            out = out | clips(a, b, method=method, seed=seed)
    return out


# Finite subgroups of SO(2): the n-fold rotation groups about its axis.
_IN_SO2 = ("1", "Z")
# Adds the 2-fold axes flipping the SO(2) axis.
_IN_O2 = ("1", "Z", "D")
# Rotations about the axis plus reflections in planes through it.
_IN_O2MINUS = ("1", "Z", "Dz")
# Everything axial lands inside the full axial group with inversion.
_IN_O2_PLUS = ("1", "Z", "D", "Z-", "Dz", "Dd", "SO2", "O2", "O2-")


def class_leq(c1: str | ClassLabel, c2: str | ClassLabel,
              seed: int = 0) -> bool:
    """Partial order: some representative of c1 sits inside one of c2."""
    a, b = _as_label(c1), _as_label(c2)
    if a == b:
        return True
    if b.kind == "SO3":
        # Either all of O(3), or the rotation group SO(3).
        return b.plus or typeclass(a) == "I"
    if a.kind == "1" and not a.plus:
        return True
    if a.kind == "1" and a.plus:
        return typeclass(b) == "II"
    if not is_infinite(b):
        if is_infinite(a):
            return False
        # For finite classes the order is recovered from the product:
        # a sits inside a conjugate of b exactly when the intersection
        # can be all of a.
        return a in clips(a, b, seed=seed)
    if b.kind == "SO2" and not b.plus:
        return a.kind in _IN_SO2 and not a.plus
    if b.kind == "O2" and not b.plus:
        return (a.kind in _IN_O2 and not a.plus) or a == so2()
    if b.kind == "SO2" and b.plus:
        return (a.kind in ("1", "Z", "SO2")
                or (a.kind == "Z-" and not a.plus))
    if b.kind == "O2" and b.plus:
        return a.kind in _IN_O2_PLUS
    # b is O(2)^-.
    if is_infinite(a):
        return a.kind == "SO2" and not a.plus
    return (a.kind in _IN_O2MINUS and not a.plus) or a == cyclic_minus(2)


@dataclass(frozen=True)
class CellCheck:
    """One cross-checked cell of the closed-form grid."""

    row: ClassLabel
    col: ClassLabel
    symbolic: ClassSet
    brute: ClassSet

    @property
    def match(self) -> bool:
        return self.symbolic == self.brute


def _sweep_rows(m_max: int) -> list[ClassLabel]:
    rows = [with_z2c(cyclic(m)) for m in range(2, m_max + 1)]
    rows += [with_z2c(dihedral(m)) for m in range(2, m_max + 1)]
    rows += [with_z2c(tetra()), with_z2c(octa()), with_z2c(icosa())]
    return rows


def _sweep_cols(n_max: int) -> list[ClassLabel]:
    cols = [cyclic_minus(2 * n) for n in range(1, n_max + 1)]
    cols += [dihedral_z(n) for n in range(2, n_max + 1)]
    cols += [dihedral_d(2 * n) for n in range(1, n_max + 1)]
    cols += [octa_minus(), o2_minus()]
    return cols


def verify_cells(n_max: int = 8, m_max: int = 8,
                 seed: int = 0) -> Iterator[CellCheck]:
    """Sweep the closed-form grid against brute force, cell by cell.

    Rows are the finite type II classes Z_m+Z2c, D_m+Z2c for
    m = 2..m_max plus T+Z2c, O+Z2c, I+Z2c.  Columns are the type III
    classes Z_{2n}^-, D_{2n}^d for n = 1..n_max, D_n^z for
    n = 2..n_max, O^-, and O(2)^-.  Finite columns are checked with
    the matrix oracle, the O(2)^- column with the axial membership
    oracle.
    """
    for row in _sweep_rows(m_max):
        for col in _sweep_cols(n_max):
            symbolic = clips(row, col)
            if is_infinite(col):
                brute = clips_axial(row, col, seed=seed)
            else:
                brute = clips(row, col, method="oracle", seed=seed)
            yield CellCheck(row=row, col=col, symbolic=symbolic, brute=brute)
