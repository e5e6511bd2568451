"""Named lattices and the concrete objects built from them.

``LAMBDA`` is the odd unimodular lattice with form ``-x1*y1' + x2*y2' + ... + x5*y5'``,
``D3`` is ``{x in Z[w]^3 : x1 + x2 + x3 = 0 mod theta}`` and ``H`` has Gram
``[[0, theta], [-theta, 0]]``. ``L0`` and ``M0`` are an explicit copy of
``D3`` inside ``LAMBDA`` and its orthogonal complement.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .finite_space import (
    FiniteHermitianSpace,
    TorsionMap,
    direct_sum as space_sum,
    find_isomorphism,
    is_isomorphic,
    make_V,
)
from .groups import from_ambient_matrix, reflection, to_ambient_matrix, triflection
from .lattice import (
    HermitianLattice,
    basis_index,
    discriminant,
    direct_sum,
    is_primitive,
    orthogonal_complement,
    overlattice_from_isotropic,
    same_span,
    saturation,
    signature,
    Signature,
)
from .linalg import Matrix, Vector, gram_of, hermitian_pair, k_inverse, vec, is_unimodular, det
from .modular import RHO, StabilizerClass, reduce_fundamental
from .ring import OMEGA, OMEGA2, THETA, EisensteinInt, EisensteinScalar

# -- the named lattices ------------------------------------------------------------

LAMBDA_GRAM = Matrix.diag([-1, 1, 1, 1, 1])
H_GRAM = Matrix([[0, THETA], [-THETA, 0]])
D3_BASIS = Matrix([vec(1, -1, 0), vec(0, 1, -1), vec(0, 0, THETA)])

W_VECTORS = (
    vec(-1, OMEGA, -1, 0, -1),
    vec(0, 0, 1, -1, 0),
    vec(0, 1, -1, 0, 0),
)
V_VECTORS = (
    vec(-THETA, OMEGA2, OMEGA2, OMEGA2, 0),
    vec(1, 0, 0, 0, 1),
)

# the stated form for the 4x4 determinant identity; q_derived() below is the one that holds
Q_GIVEN = Matrix([[6, 3, THETA], [3, 6, 2 * THETA], [-THETA, -2 * THETA, 3]])


def lambda_lattice() -> HermitianLattice:
    return HermitianLattice.from_basis(Matrix.identity(5), LAMBDA_GRAM, name="Lambda")


def d3() -> HermitianLattice:
    return HermitianLattice.from_basis(D3_BASIS, Matrix.identity(3), name="D3")


def d3_a(a) -> HermitianLattice:
    """Lattice with basis ``(1,-1,0), (0,1,-1), (0,0,a)`` in ``Z[w]^3``."""
    basis = Matrix([vec(1, -1, 0), vec(0, 1, -1), vec(0, 0, a)])
    return HermitianLattice.from_basis(basis, Matrix.identity(3), name=f"D3({a})")


def h_lattice() -> HermitianLattice:
    return HermitianLattice(H_GRAM, name="H")


def l0() -> HermitianLattice:
    return HermitianLattice.from_basis(Matrix(list(W_VECTORS)), LAMBDA_GRAM, name="L0")


def m0() -> HermitianLattice:
    return HermitianLattice.from_basis(Matrix(list(V_VECTORS)), LAMBDA_GRAM, name="M0")


BUILTIN_LATTICES = {
    "lambda": lambda_lattice,
    "d3": d3,
    "h": h_lattice,
    "L0": l0,
    "M0": m0,
}


def q_derived() -> Matrix:
    """``3 * G^-T`` for the Gram ``G`` of D3: the form with ``det = 3 - Q(a, a)``."""
    g = d3().gram
    return k_inverse(g).scale(3).T.integral()


def bordered_gram(a: Sequence) -> Matrix:
    """Gram of ``v1, v2, v3`` (the D3 basis) and ``v4`` with ``(v_i, v4) = a_i``, ``(v4, v4) = 1``."""
    g = d3().gram
    rows = [list(g.row(i)) + [a[i]] for i in range(3)]
    rows.append([x.conj() for x in a] + [EisensteinInt(1)])
    return Matrix(rows)


def case_gram(a) -> Matrix:
    """Gram ``[[2, 1, conj(a)], [1, 2, 1], [a, 1, 2]]`` of three norm-2 vectors."""
    a = EisensteinInt.coerce(a)
    return Matrix([[2, 1, a.conj()], [1, 2, 1], [a, 1, 2]])


# -- reflections and triflections of D3 in ambient coordinates -------------------------


def _to_lattice_coords(lat: HermitianLattice, x: Sequence) -> Vector:
    y = k_inverse(lat.basis).vmul(x)
    if any(isinstance(v, EisensteinScalar) for v in y):
        raise ValueError("vector is not in the lattice")
    return y


def reflection_in(lat: HermitianLattice, v_ambient: Sequence) -> Matrix:
    """Reflection of ``lat`` in an ambient vector, as a lattice-coordinate matrix."""
    return reflection(_to_lattice_coords(lat, v_ambient), lat.gram)


def triflection_in(lat: HermitianLattice, a_ambient: Sequence) -> Matrix:
    return triflection(_to_lattice_coords(lat, a_ambient), lat.gram)


A1 = vec(0, 0, THETA)
A2 = vec(1, 1, OMEGA)
D3_ROOTS = (vec(1, -1, 0), vec(0, 1, -1), vec(1, -OMEGA, 0))
SIGMA_A2_GIVEN = Matrix(
    [[OMEGA, OMEGA2, 1], [OMEGA2, OMEGA, 1], [OMEGA, OMEGA, OMEGA]]
).scale(EisensteinScalar(-THETA, 3))
C_MATRIX = Matrix.diag([-1, -1, -1])
A_MATRIX = Matrix.diag([1, 1, OMEGA])
ALPHA = (EisensteinScalar(THETA, 3),) * 3
BETA = vec(1, 0, 0)


def disc_images_in_alpha_beta(lat: HermitianLattice, g_lattice: Matrix) -> list[list[int]]:
    """Matrix over F_3 of ``g`` on ``D(D3)`` in the basis alpha, beta.

    Row ``k`` holds the coordinates of the image of the ``k``-th basis vector.
    """
    d = discriminant(lat)
    binv = k_inverse(lat.basis)
    basis = [d.coords(binv.vmul(x)) for x in (ALPHA, BETA)]
    space = d.space
    table = {}
    for s in range(3):
        for t in range(3):
            table[space.add(space.scale(s, basis[0]), space.scale(t, basis[1]))] = (s, t)
    if len(table) != 9:
        raise ValueError("alpha and beta do not generate the discriminant group")
    out = []
    for x in (ALPHA, BETA):
        img = d.coords(g_lattice.vmul(binv.vmul(x)))
        out.append(list(table[img]))
    return out


# -- gluing D3 and H ----------------------------------------------------------------------


@dataclass(frozen=True)
class GlueResult:
    glued: HermitianLattice  # ambient: D3 + H, basis over K
    index: int
    determinant: EisensteinInt
    signature: Signature
    disc_is_v_plus_v_twisted: bool
    d3_image: HermitianLattice
    h_image: HermitianLattice


def build_glue() -> GlueResult:
    """Overlattice of ``D3 + H`` along the graph of an anti-isometry ``D(D3) -> D(H)``."""
    dd3, dh = discriminant(d3()), discriminant(h_lattice())
    phi = find_isomorphism(dd3.space, dh.space.twist())
    if phi is None:
        raise RuntimeError("D(D3) and D(H)(-1) are not isomorphic")
    base = direct_sum(d3(), h_lattice(), name="D3+H")
    lifts = []
    for i in range(dd3.space.ngens):
        e = dd3.space.generator(i)
        lifts.append(tuple(dd3.lift(e)) + tuple(dh.lift(phi[i])))
    glued = overlattice_from_isotropic(HermitianLattice(base.gram, name="D3+H"), lifts,
                                       name="Lambda''")
    idx = basis_index(glued.basis)
    index = int(1 / idx)
    binv = k_inverse(glued.basis)
    d3_rows = Matrix([binv.row(i) for i in range(3)]).integral()
    h_rows = Matrix([binv.row(i) for i in range(3, 5)]).integral()
    d3_img = HermitianLattice.from_basis(d3_rows, glued.gram, name="D3")
    h_img = HermitianLattice.from_basis(h_rows, glued.gram, name="H")
    target = space_sum(make_V(), make_V().twist())
    return GlueResult(
        glued=glued,
        index=index,
        determinant=det(glued.gram),
        signature=signature(glued),
        disc_is_v_plus_v_twisted=is_isomorphic(discriminant(HermitianLattice(base.gram)).space, target),
        d3_image=d3_img,
        h_image=h_img,
    )


@dataclass(frozen=True)
class EmbeddingReport:
    gram_l0: Matrix
    witness: Matrix | None
    primitive: bool
    complement: HermitianLattice
    complement_matches_m0: bool
    m0_gram: Matrix
    pairings_vanish: bool


def verify_explicit_embedding() -> EmbeddingReport:
    from .lattice import is_isometric_definite

    lam, sub = lambda_lattice(), l0()
    comp = orthogonal_complement(sub, lam, name="M0")
    mo = m0()
    pairs = all(
        hermitian_pair(w, v, LAMBDA_GRAM) == EisensteinInt(0) for w in W_VECTORS for v in V_VECTORS
    )
    return EmbeddingReport(
        gram_l0=sub.gram,
        witness=is_isometric_definite(sub, d3()),
        primitive=is_primitive(sub),
        complement=comp,
        complement_matches_m0=same_span(comp.basis, mo.basis),
        m0_gram=mo.gram,
        pairings_vanish=pairs,
    )


# -- the period point j0 ---------------------------------------------------------------


SQRT3 = math.sqrt(3)


def _complex_vec(v: Sequence) -> tuple[complex, ...]:
    return tuple(x.to_complex() for x in v)


def lambda_form(x: Sequence[complex], y: Sequence[complex]) -> complex:
    return -x[0] * y[0].conjugate() + sum(a * b.conjugate() for a, b in zip(x[1:], y[1:]))


@dataclass(frozen=True)
class PeriodPoint:
    tau: complex
    coordinates: tuple[complex, ...]
    norm: float


def j0(tau) -> PeriodPoint:
    """``tau * v1 + v2`` in ``LAMBDA (x) C``; its norm is ``-2 sqrt(3) Im(tau)``."""
    tau = complex(tau)
    if not tau.imag > 0:
        raise ValueError("tau must lie in the upper half-plane (Im tau > 0)")
    v1, v2 = (_complex_vec(v) for v in V_VECTORS)
    coords = tuple(tau * a + b for a, b in zip(v1, v2))
    return PeriodPoint(tau, coords, lambda_form(coords, coords).real)


def norm_minus3_witness(tau, bound: int = 2, tol: float = 1e-9) -> Vector | None:
    """A vector ``x1 v1 + x2 v2`` of M0 with norm -3 proportional to ``j0(tau)``, if small."""
    tau = complex(tau)
    from itertools import product

    best = None
    rng = range(-bound, bound + 1)
    for a, b, c, d in product(rng, repeat=4):
        if 3 * (a * d - b * c) != -3:
            continue
        x1, x2 = EisensteinInt(a, b), EisensteinInt(c, d)
        if abs(x1.to_complex() - tau * x2.to_complex()) < tol:
            v = tuple(x1 * p + x2 * q for p, q in zip(*V_VECTORS))
            if best is None:
                best = v
    return best


STAB_TOL = 1e-9
STAB_BAND = 1e-6


def stabilizer_class_lattice(tau) -> StabilizerClass:
    """Trichotomy by proximity of the reduced point to the w-corners or to i."""
    red = reduce_fundamental(tau).reduced
    d_rho = min(abs(red - RHO), abs(red - (RHO + 1)))
    d_i = abs(red - 1j)
    if d_rho < STAB_TOL:
        return StabilizerClass.ORDER_648
    if d_i < STAB_TOL:
        return StabilizerClass.ORDER_108
    if d_rho < STAB_BAND or d_i < STAB_BAND:
        raise ValueError("near-boundary, increase precision")
    return StabilizerClass.ORDER_54
