"""Exact hermitian lattices over the Eisenstein integers Z[w], w = exp(2*pi*i/3).

Submodules:

* ``ring`` -- Z[w], its fraction field K and residues
* ``linalg`` -- exact matrices, determinants, Smith and Hermite forms
* ``lattice`` -- hermitian lattices, discriminant groups, short vectors
* ``finite_space`` -- finite hermitian spaces and their automorphisms
* ``groups`` -- reflections, triflections and finite isometry groups
* ``constructions`` -- the named lattices and derived objects
* ``modular`` -- j-invariant, fundamental domain, Hesse pencil
* ``checks`` -- the verification registry used by the CLI
"""

from .ring import OMEGA, THETA, EisensteinInt, EisensteinScalar
from .linalg import Matrix, det, hnf_row_reduce, k_inverse, snf
from .lattice import (
    HermitianLattice,
    discriminant_group,
    short_vectors,
    signature,
)
from .finite_space import FiniteHermitianSpace, aut_group, make_V
from .matgroup import MatrixGroup
from .modular import StabilizerClass

__all__ = [
    "OMEGA", "THETA", "EisensteinInt", "EisensteinScalar",
    "Matrix", "det", "hnf_row_reduce", "k_inverse", "snf",
    "HermitianLattice", "discriminant_group", "short_vectors", "signature",
    "FiniteHermitianSpace", "aut_group", "make_V", "MatrixGroup", "StabilizerClass",
]

__version__ = "0.1.0"
