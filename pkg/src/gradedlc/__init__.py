"""Exact multigraded local cohomology of c-monomial ideals.

Computes graded components of local cohomology via degreewise slices of
the extended Cech complex, verifies that dimensions are rigid on sign
blocks, classifies components over the graded base K[Y], and provides a
normal-form rewriter for the associated Weyl-algebra operators.  All
arithmetic is exact (integers and fractions); no floating point is used
anywhere.
"""

from .cech import CohomologyReport, build_slice, cohomology, slice_dims
from .cech import euler_action_check, partial_chain_map, x_chain_map
from .corpus import generate_corpus, random_ideal
from .expr import ExprError, parse
from .lattice import (
    CMonomial,
    CMonomialIdeal,
    DimensionMismatch,
    FIELD,
    GRADED_PID,
    SignPattern,
    block_of,
    enumerate_blocks,
)
from .linalg import RationalMatrix
from .rigidity import BlockTable, CheckReport, block_table, scan_rigidity
from .structure import (
    BassTable,
    StructureTriple,
    bass_table,
    block_structure,
    structure_triple,
    y_profile,
)
from .weyl import CommutativePoly, WeylElement, euler

__version__ = "0.1.0"

__all__ = [
    "BassTable",
    "BlockTable",
    "CMonomial",
    "CMonomialIdeal",
    "CheckReport",
    "CohomologyReport",
    "CommutativePoly",
    "DimensionMismatch",
    "ExprError",
    "FIELD",
    "GRADED_PID",
    "RationalMatrix",
    "SignPattern",
    "StructureTriple",
    "WeylElement",
    "bass_table",
    "block_of",
    "block_structure",
    "block_table",
    "build_slice",
    "cohomology",
    "enumerate_blocks",
    "euler",
    "euler_action_check",
    "generate_corpus",
    "parse",
    "partial_chain_map",
    "random_ideal",
    "scan_rigidity",
    "slice_dims",
    "structure_triple",
    "x_chain_map",
    "y_profile",
]
