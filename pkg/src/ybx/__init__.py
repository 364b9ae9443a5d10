"""Exact toolkit for set-theoretic braid solutions, their matrix
Baxterizations, twists, q-deformations, boundary operators, and open
spin-chain transfer matrices."""

from .brace import (
    AlgebraError,
    FiniteBrace,
    NilpotentRingSpec,
    brace_from_ring,
    circle_inverse,
    solution_from_brace,
    validate_brace,
    validate_nilpotent_ring,
    zero_ring_spec,
    zp2_ring_spec,
)
from .solutions import SetSolution, validate_solution
from .linearize import baxterize, bax_R, linearize
from .tensor import ShapedMatrix, commutator, embed_pair, kron, perm_p

__version__ = "0.1.0"
