"""Difference operators on sequences of Schur function products.

The package computes exactly with integer Schur expansions and checks, over
finite ranges, when compositions of difference operators annihilate
products of stabilizing sequences.
"""

from .errors import SchurSeqError
from .partitions import Partition, componentwise_sum, is_horizontal_strip, prepend_row
from .polytope import (
    PartialMatrix,
    affine_witnesses,
    enumerate_centres,
    enumerate_points,
    face_filter,
    homogeneous_product,
    is_member,
    product_with_border,
)
from .schur import (
    SchurExpansion,
    add,
    jacobi_trudi_hook_terms,
    multiplicity,
    pieri_multiply,
    restrict_length,
    schur,
    schur_multiply,
    shift,
)
from .sequences import (
    DiffOp,
    SequenceFamily,
    apply,
    compose,
    detect_stabilization,
    eval_pointwise,
    hook_family,
    vanishing_onset,
)

__version__ = "0.1.0"

__all__ = [
    "SchurSeqError",
    "Partition",
    "componentwise_sum",
    "is_horizontal_strip",
    "prepend_row",
    "PartialMatrix",
    "affine_witnesses",
    "enumerate_centres",
    "enumerate_points",
    "face_filter",
    "homogeneous_product",
    "is_member",
    "product_with_border",
    "SchurExpansion",
    "add",
    "jacobi_trudi_hook_terms",
    "multiplicity",
    "pieri_multiply",
    "restrict_length",
    "schur",
    "schur_multiply",
    "shift",
    "DiffOp",
    "SequenceFamily",
    "apply",
    "compose",
    "detect_stabilization",
    "eval_pointwise",
    "hook_family",
    "vanishing_onset",
]
