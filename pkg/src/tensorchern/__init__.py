"""Exact Chern and Segre classes of tensor products of vector bundles."""

from .errors import DomainError, InvariantViolation, OracleLimitError
from .lr_rule import lr_coefficient, schur_product
from .partitions import Partition, conjugate, parse_partition
from .polyring import E, F, BivarPoly
from .tensor_chern import (
    chern_expansion,
    p_coefficient_at,
    p_coefficient_symbolic,
    q_coefficient_at,
    q_coefficient_symbolic,
    segre_expansion,
)

__all__ = [
    "BivarPoly",
    "DomainError",
    "E",
    "F",
    "InvariantViolation",
    "OracleLimitError",
    "Partition",
    "chern_expansion",
    "conjugate",
    "lr_coefficient",
    "p_coefficient_at",
    "p_coefficient_symbolic",
    "parse_partition",
    "q_coefficient_at",
    "q_coefficient_symbolic",
    "schur_product",
    "segre_expansion",
]
