"""Clips products of conjugacy classes of closed O(3) subgroups.

The clips product of two classes collects every conjugacy class of
intersections g1 H1 g1^T  ∩  g2 H2 g2^T as the gi range over O(3).
It computes the symmetry classes of direct sums of tensor spaces from
the classes of the factors, which is how the coupled electroelastic
catalog in :mod:`o3clips.piezo` is produced.

Two independent evaluation paths are exposed: closed-form rules
(``method="symbolic"``, the default) and a brute-force matrix oracle
for finite classes (``method="oracle"``); ``method="both"`` runs the
two and raises :class:`ClipsMismatch` if they ever disagree.
"""

from .axial import clips_axial, is_axial
from .engine import (
    CellCheck,
    ClipsMismatch,
    class_leq,
    clips,
    clips_families,
    verify_cells,
)
from .groups import (
    GroupError,
    RecognitionError,
    generators,
    materialize,
    recognize,
    reference_group,
)
from .infinite import clips_reduce, is_infinite, typeclass
from .labels import (
    ClassLabel,
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
from .oracle import clips_oracle
from .piezo import (
    ELA_CLASSES,
    PIEZ_CLASSES,
    PIEZ_LAW_CLASSES,
    PIEZ_LAW_PRINTED,
    SYM_CLASSES,
    IsotropyCatalog,
    PiezDiff,
    builtin_isotropy,
    compute_piez,
    diff_piez,
    isotropy_direct_sum,
    printed_collisions,
)
from .tables import clips_type2_type3

__version__ = "0.1.0"

__all__ = [
    "CellCheck",
    "ClassLabel",
    "ClassSet",
    "ClipsMismatch",
    "ELA_CLASSES",
    "GroupError",
    "IsotropyCatalog",
    "PIEZ_CLASSES",
    "PIEZ_LAW_CLASSES",
    "PIEZ_LAW_PRINTED",
    "PiezDiff",
    "RecognitionError",
    "SYM_CLASSES",
    "builtin_isotropy",
    "canonicalize",
    "class_leq",
    "class_set",
    "clips",
    "clips_axial",
    "clips_families",
    "clips_oracle",
    "clips_reduce",
    "clips_type2_type3",
    "compare",
    "compute_piez",
    "cyclic",
    "cyclic_minus",
    "diff_piez",
    "dihedral",
    "dihedral_d",
    "dihedral_z",
    "format_label",
    "generators",
    "icosa",
    "is_axial",
    "is_infinite",
    "isotropy_direct_sum",
    "materialize",
    "o2",
    "o2_minus",
    "o3",
    "octa",
    "octa_minus",
    "order_of",
    "parse_label",
    "printed_collisions",
    "proper_part",
    "recognize",
    "reference_group",
    "so2",
    "so3",
    "sort_key",
    "strip_z2c",
    "tetra",
    "tilde_part",
    "trivial",
    "typeclass",
    "verify_cells",
    "with_z2c",
]
