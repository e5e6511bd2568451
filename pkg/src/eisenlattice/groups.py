"""Reflections, triflections and finite isometry groups of hermitian lattices.

All matrices act on row vectors from the right: ``x -> x @ g``. A matrix is
an isometry of ``gram`` when ``g @ gram @ g.H == gram``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .finite_space import TorsionMap
from .lattice import (
    Discriminant,
    HermitianLattice,
    ShortVectorSet,
    discriminant,
    isometries,
    short_vectors,
)
from .linalg import Matrix, _entry, dot, hermitian_pair, k_inverse, vec_conj
from .matgroup import DEFAULT_CAP, MatrixGroup, orbits
from .ring import ONE, OMEGA, THETA, EisensteinInt, EisensteinScalar


def _gram(lat) -> Matrix:
    return lat.gram if isinstance(lat, HermitianLattice) else lat


def is_isometry(g: Matrix, gram: Matrix) -> bool:
    return g @ gram @ g.H == gram


def _rank_one_update(v: Sequence, gram: Matrix, coeff) -> Matrix:
    """``I - coeff * (gram @ conj(v)^T) @ v``."""
    n = gram.rows
    col = tuple(dot(gram.row(i), vec_conj(v)) for i in range(n))
    rows = []
    for i in range(n):
        rows.append([
            (ONE if i == j else EisensteinInt(0)) - coeff * col[i] * v[j] for j in range(n)
        ])
    return Matrix(rows)


def reflection(v: Sequence, gram) -> Matrix:
    """``w -> w - (w, v) v`` for a vector of norm 2."""
    g = _gram(gram)
    if hermitian_pair(v, v, g) != EisensteinInt(2):
        raise ValueError("reflection needs a vector of norm 2")
    return _rank_one_update(v, g, ONE)


TRIFLECTION_COEFF = EisensteinScalar(ONE - OMEGA, 3)


def triflection(a: Sequence, gram) -> Matrix:
    """``w -> w - ((1 - w)/3) (w, a) a`` for ``(a, a) = 3`` with ``(a, L)`` in theta*Z[w]."""
    g = _gram(gram)
    if hermitian_pair(a, a, g) != EisensteinInt(3):
        raise ValueError("triflection needs a vector of norm 3")
    pairings = g.vmul(a)
    if not all(isinstance(x, EisensteinInt) and THETA.divides(x) for x in pairings):
        raise ValueError("triflection needs (a, w) in theta*Z[w] for every lattice vector w")
    m = _rank_one_update(a, g, TRIFLECTION_COEFF)
    if not m.is_integral():  # unreachable given the checks above
        raise ValueError("triflection is not integral")
    return m


def isometry_group(generators: Sequence[Matrix], gram, *, cap: int = DEFAULT_CAP,
                   name: str = "") -> MatrixGroup:
    g = _gram(gram)
    for m in generators:
        if not is_isometry(m, g):
            raise ValueError("generator is not an isometry of the gram matrix")
    return MatrixGroup(generators, Matrix.identity(g.rows), gram=g, cap=cap, name=name)


def closure(group: MatrixGroup) -> MatrixGroup:
    return group.closure()


def reflections_of(vectors: ShortVectorSet | Sequence, gram) -> list[Matrix]:
    """Distinct reflections in the given norm-2 vectors (unit multiples coincide)."""
    g = _gram(gram)
    return list(dict.fromkeys(reflection(v, g) for v in vectors))


def weyl_group(lat, *, cap: int = DEFAULT_CAP) -> MatrixGroup:
    """Group generated by the reflections in all norm-2 vectors."""
    g = _gram(lat)
    roots = short_vectors(g, 2)
    name = f"W({lat.name})" if isinstance(lat, HermitianLattice) and lat.name else "W"
    grp = isometry_group(reflections_of(roots, g), g, cap=cap, name=name).closure()
    return grp.minimal_generators()


def full_aut_definite(lat, *, cap: int = DEFAULT_CAP) -> MatrixGroup:
    """All isometries of a definite lattice, by backtracking over short vectors."""
    g = _gram(lat)
    elems = isometries(g, g, limit=cap)
    name = f"Aut({lat.name})" if isinstance(lat, HermitianLattice) and lat.name else "Aut"
    grp = MatrixGroup([], Matrix.identity(g.rows), gram=g, cap=cap, elements=elems, name=name)
    return grp.minimal_generators()


def vector_orbits(group: MatrixGroup, vectors: ShortVectorSet | Sequence) -> list[list]:
    """Orbit partition; the first member of each orbit is its lexicographic minimum."""
    from .linalg import vec_key

    pts = sorted(vectors, key=vec_key)
    gens = group.generators or group.elements
    orbs = orbits(gens, pts, lambda v, m: m.vmul(v))
    return [sorted(o, key=vec_key) for o in orbs]


# -- the induced action on the discriminant group ---------------------------------


@dataclass
class GroupHom:
    """The action of a group of isometries on the discriminant group."""

    source: MatrixGroup
    disc: Discriminant

    def image_of(self, g: Matrix) -> TorsionMap:
        d = self.disc
        return TorsionMap(d.space, [d.coords(g.vmul(x)) for x in d.generators])

    @property
    def identity(self) -> TorsionMap:
        return TorsionMap.identity(self.disc.space)

    def kernel(self) -> list[Matrix]:
        ident = self.identity
        return [g for g in self.source.elements if self.image_of(g) == ident]

    def image(self) -> MatrixGroup:
        gens = self.source.generators or self.source.elements
        imgs = [self.image_of(g) for g in gens]
        return MatrixGroup(imgs, self.identity, name=f"image({self.source.name})")

    def is_homomorphism(self) -> bool:
        gens = self.source.generators
        return all(
            self.image_of(a @ b) == self.image_of(a) @ self.image_of(b) for a in gens for b in gens
        )


def discriminant_action(group: MatrixGroup, lat: HermitianLattice) -> GroupHom:
    for g in group.generators:
        if not is_isometry(g, lat.gram):
            raise ValueError("group element is not an isometry of the lattice")
    return GroupHom(group, discriminant(lat))


# -- the lattice H -------------------------------------------------------------------


def aut_H_membership(m: Matrix) -> bool:
    """``a conj(b) = conj(a) b``, ``c conj(d) = conj(c) d``, ``a conj(d) - b conj(c) = 1``."""
    if m.shape != (2, 2) or not m.is_integral():
        return False
    a, b = m.row(0)
    c, d = m.row(1)
    return (
        a * b.conj() == a.conj() * b
        and c * d.conj() == c.conj() * d
        and a * d.conj() - b * c.conj() == ONE
    )


def _int_params(w: Sequence) -> list[list[int]]:
    """``(a + b w, c + d w) -> [[a, c], [b, d]]``."""
    x1, x2 = w
    return [[x1.a, x2.a], [x1.b, x2.b]]


def norm_from_params(a: int, b: int, c: int, d: int) -> int:
    """Norm of ``(a + b w) q1 + (c + d w) q2`` in H, which is ``3(ad - bc)``."""
    return 3 * (a * d - b * c)


def map_norm_minus3(w1: Sequence, w2: Sequence, h_gram: Matrix | None = None) -> Matrix:
    """An integral ``g`` in SL_2(Z) with ``w1 @ g == w2`` for norm -3 vectors of H."""
    from .constructions import H_GRAM

    gram = h_gram or H_GRAM
    w1 = tuple(_entry(x) for x in w1)
    w2 = tuple(_entry(x) for x in w2)
    for w in (w1, w2):
        if len(w) != 2 or hermitian_pair(w, w, gram) != EisensteinInt(-3):
            raise ValueError("map_norm_minus3 needs two vectors of norm -3 in H")
    p1, p2 = _int_params(w1), _int_params(w2)
    # p1 has determinant -1, so its inverse is integral
    (a, c), (b, d) = p1
    det1 = a * d - c * b
    inv = [[d * det1, -c * det1], [-b * det1, a * det1]]
    g = [[sum(inv[i][k] * p2[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    m = Matrix(g)
    assert m.vmul(w1) == w2
    return m


# -- ambient coordinates ------------------------------------------------------------------


def to_ambient_matrix(lat: HermitianLattice, g: Matrix) -> Matrix:
    """The same linear map written in ambient coordinates: ``B^-1 g B``."""
    b = lat.basis
    return k_inverse(b) @ g @ b


def from_ambient_matrix(lat: HermitianLattice, m: Matrix) -> Matrix:
    """Lattice-coordinate matrix ``B m B^-1`` of an ambient map preserving the lattice."""
    b = lat.basis
    out = b @ m @ k_inverse(b)
    if not out.is_integral():
        raise ValueError("ambient map does not preserve the lattice")
    return out
