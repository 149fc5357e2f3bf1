"""Symmetry classes of the fully coupled electroelastic law.

A linear electroelastic material is described by a triple of constitutive
tensors: the order-4 elasticity tensor, the order-3 coupling tensor, and
the order-2 permittivity tensor.  The symmetry classes of each factor
space form a known finite catalog; the classes of the coupled law are the
classes of intersections of one subgroup drawn from each catalog, which
is exactly a fold of the family clips product.

This module stores the three published catalogs, the published 25-class
answer for the coupled law, and the fold that recomputes it.  Two printed
spellings in the published answer denote one class (D2^d is conjugate to
D2^z), so the printed list has 26 entries and 25 distinct classes; the
diff report keeps both counts visible instead of silently folding them.

Space names: Ela (elasticity), Piez (coupling), Sym (permittivity),
PiezLaw (the coupled triple).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .engine import class_leq, clips, clips_families
from .labels import ClassLabel, ClassSet, class_set, format_label, parse_label

__all__ = [
    "ELA_CLASSES",
    "IsotropyCatalog",
    "PIEZ_CLASSES",
    "PIEZ_LAW_CLASSES",
    "PIEZ_LAW_PRINTED",
    "PiezDiff",
    "SPACE_NAMES",
    "SYM_CLASSES",
    "builtin_isotropy",
    "compute_piez",
    "diff_piez",
    "isotropy_direct_sum",
    "printed_collisions",
]

SPACE_NAMES = ("Ela", "Piez", "Sym", "PiezLaw")

# Elasticity tensors: 8 classes.
ELA_CLASSES = class_set(
    "1", "Z2+Z2c", "D2+Z2c", "D3+Z2c", "D4+Z2c", "O+Z2c", "O(2)+Z2c", "O(3)",
)

# Order-3 coupling tensors: 16 classes.
PIEZ_CLASSES = class_set(
    "1", "Z2", "Z3", "Z2^-", "Z4^-", "D2", "D3", "D2^z", "D3^z",
    "D4^d", "D6^d", "SO(2)", "O(2)", "O(2)^-", "O^-", "O(3)",
)

# Symmetric order-2 tensors: 3 classes (distinct, double, triple eigenvalue).
SYM_CLASSES = class_set("D2+Z2c", "O(2)+Z2c", "O(3)")

# The published answer for the coupled law, spelled as printed.  D2^d and
# D2^z are two names for one class, so 26 spellings, 25 classes.
PIEZ_LAW_PRINTED: tuple[str, ...] = (
    "1", "Z2", "Z3", "Z4", "D2", "D3", "D4", "SO(2)", "O(2)", "O(3)",
    "Z2+Z2c", "D2+Z2c", "D3+Z2c", "D4+Z2c", "O+Z2c", "O(2)+Z2c",
    "Z2^-", "Z4^-", "D2^z", "D3^z", "D4^z", "D2^d", "D4^d", "D6^d",
    "O^-", "O(2)^-",
)

PIEZ_LAW_CLASSES = class_set(*PIEZ_LAW_PRINTED)


@dataclass(frozen=True)
class IsotropyCatalog:
    """A named space together with its set of symmetry classes."""

    space_name: str
    classes: ClassSet

    def bounds(self) -> tuple[ClassLabel, ClassLabel]:
        """(least, greatest) members under class_leq; raises if either
        is missing (every genuine catalog is bounded)."""
        least = [a for a in self.classes
                 if all(class_leq(a, b) for b in self.classes)]
        greatest = [b for b in self.classes
                    if all(class_leq(a, b) for a in self.classes)]
        if not least or not greatest:
            raise ValueError(f"catalog {self.space_name} is not bounded")
        return least[0], greatest[0]


_BUILTIN = {
    "Ela": ELA_CLASSES,
    "Piez": PIEZ_CLASSES,
    "Sym": SYM_CLASSES,
    "PiezLaw": PIEZ_LAW_CLASSES,
}


def builtin_isotropy(space_name: str) -> IsotropyCatalog:
    """The published catalog for one of the known spaces."""
    try:
        return IsotropyCatalog(space_name, _BUILTIN[space_name])
    except KeyError:
        raise ValueError(
            f"unknown space {space_name!r}; expected one of {SPACE_NAMES}"
        ) from None


def _classes_of(cat: IsotropyCatalog | ClassSet | Iterable) -> ClassSet:
    if isinstance(cat, IsotropyCatalog):
        return cat.classes
    if isinstance(cat, ClassSet):
        return cat
    return class_set(*cat)


def isotropy_direct_sum(catalogs: Sequence, method: str = "symbolic",
                        seed: int = 0) -> ClassSet:
    """Symmetry classes of a direct sum of tensor spaces: the left fold
    of the family clips product over the factor catalogs.  The result is
    independent of the fold order."""
    if not catalogs:
        raise ValueError("need at least one catalog")
    sets = [_classes_of(c) for c in catalogs]
    acc = sets[0]
    for nxt in sets[1:]:
        acc = clips_families(acc, nxt, method=method, seed=seed)
    return acc


def compute_piez(method: str = "symbolic", seed: int = 0) -> IsotropyCatalog:
    """Symmetry classes of the coupled (elasticity, coupling,
    permittivity) triple, recomputed from the three factor catalogs."""
    classes = isotropy_direct_sum(
        [ELA_CLASSES, PIEZ_CLASSES, SYM_CLASSES], method=method, seed=seed
    )
    return IsotropyCatalog("PiezLaw", classes)


def printed_collisions() -> list[tuple[str, str]]:
    """Pairs of printed spellings in the published coupled-law list that
    name the same class (canonical spelling second)."""
    out = []
    for spelling in PIEZ_LAW_PRINTED:
        canon = format_label(parse_label(spelling))
        if canon != spelling:
            out.append((spelling, canon))
    return out


@dataclass(frozen=True)
class PiezDiff:
    """Computed coupled-law classes diffed against the published list."""

    computed: ClassSet
    expected: ClassSet
    missing: tuple[str, ...]
    extra: tuple[str, ...]
    witnesses: dict
    printed_count: int
    canonical_count: int
    collisions: tuple[tuple[str, str], ...]

    @property
    def match(self) -> bool:
        return not self.missing and not self.extra


def diff_piez(method: str = "symbolic", seed: int = 0) -> PiezDiff:
    """Recompute the coupled-law catalog and diff it against the
    published list; extras are traced back to a clips pair that produced
    them in the outer fold stage."""
    stage1 = clips_families(ELA_CLASSES, PIEZ_CLASSES, method=method,
                            seed=seed)
    computed = clips_families(stage1, SYM_CLASSES, method=method, seed=seed)
    expected = PIEZ_LAW_CLASSES
    missing = tuple(lbl for lbl in expected.labels()
                    if parse_label(lbl) not in computed)
    extra = tuple(lbl for lbl in computed.labels()
                  if parse_label(lbl) not in expected)
    witnesses = {}
    for lbl in extra:
        target = parse_label(lbl)
        for a in stage1:
            for b in SYM_CLASSES:
                if target in clips(a, b, method=method, seed=seed):
                    witnesses[lbl] = (format_label(a), format_label(b))
                    break
            if lbl in witnesses:
                break
    return PiezDiff(
        computed=computed,
        expected=expected,
        missing=missing,
        extra=extra,
        witnesses=witnesses,
        printed_count=len(PIEZ_LAW_PRINTED),
        canonical_count=len(expected),
        collisions=tuple(printed_collisions()),
    )
