"""Exact Kronecker, Littlewood-Richardson and stable rectangular Kronecker coefficients."""
from .coeffs import kronecker, lr, lr_rectangle, rectangular_kron, tensor_square_decomposition
from .errors import ConsistencyError, RectKronError, ResourceLimitError, SizeMismatchError
from .partitions import Partition, conjugate, enumerate_partitions
from .stable import (
    derangement_count,
    fpf_multiplicity,
    limit_in_dn,
    sl_invariant_dim,
    stable_table,
)
from .symchar import character_table, dim_irrep, mn_character

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "Partition",
    "RectKronError",
    "ResourceLimitError",
    "SizeMismatchError",
    "character_table",
    "conjugate",
    "derangement_count",
    "dim_irrep",
    "enumerate_partitions",
    "fpf_multiplicity",
    "kronecker",
    "limit_in_dn",
    "lr",
    "lr_rectangle",
    "mn_character",
    "rectangular_kron",
    "sl_invariant_dim",
    "stable_table",
    "tensor_square_decomposition",
]
