"""Hermitian lattices over Z[w]: signature, discriminant groups, short vectors,
complements, saturation, overlattices and definite isometry search.

A lattice is a Gram matrix, optionally with an embedding into an ambient
lattice given by basis rows in ambient coordinates (rows may be K-valued for
overlattices).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .finite_space import FiniteHermitianSpace, trivial_space
from .linalg import (
    Matrix,
    Vector,
    _entry,
    block_diag,
    clear_denominators,
    det,
    dot,
    gram_of,
    hnf_row_reduce,
    left_kernel,
    snf,
    stack,
    vec_conj,
    vec_key,
)
from .ring import ZERO, EisensteinInt, EisensteinScalar, reduce_mod


def _empty(rows: int = 0, cols: int = 0) -> Matrix:
    return Matrix([], cols=cols) if rows == 0 else Matrix.zeros(rows, cols)


def _gram(basis: Matrix, gram: Matrix) -> Matrix:
    if basis.rows == 0:
        return _empty()
    return gram_of(basis, gram)


@dataclass(frozen=True)
class HermitianLattice:
    """A nondegenerate hermitian lattice, identified by its Gram matrix.

    ``ambient_gram`` and ``basis`` (rows in ambient coordinates) are optional;
    when present, ``basis @ ambient_gram @ basis.H == gram``.
    """

    gram: Matrix
    ambient_gram: Matrix | None = None
    basis: Matrix | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        g = self.gram
        if not g.is_square():
            raise ValueError("gram matrix must be square")
        if not g.is_integral():
            raise ValueError("gram matrix must be integral")
        if not g.is_hermitian():
            raise ValueError("gram matrix is not conjugate-symmetric")
        if g.rows and not det(g):
            raise ValueError("degenerate gram matrix")
        if (self.ambient_gram is None) != (self.basis is None):
            raise ValueError("ambient needs both a gram and a basis")
        if self.basis is not None:
            if self.basis.rows != g.rows or self.basis.cols != self.ambient_gram.rows:
                raise ValueError("ambient basis has the wrong shape")
            if _gram(self.basis, self.ambient_gram) != g:
                raise ValueError("ambient basis does not reproduce the gram matrix")

    @classmethod
    def from_basis(cls, basis: Matrix, ambient_gram: Matrix, name: str = "") -> "HermitianLattice":
        return cls(_gram(basis, ambient_gram), ambient_gram, basis, name=name)

    @property
    def rank(self) -> int:
        return self.gram.rows

    @property
    def has_ambient(self) -> bool:
        return self.basis is not None

    def disc(self):
        """Determinant of the Gram matrix (always a rational integer)."""
        return det(self.gram) if self.rank else EisensteinInt(1)

    def pair(self, x: Sequence, y: Sequence):
        """Form value of two coordinate vectors in this lattice's basis."""
        return dot(self.gram.vmul(x), vec_conj(y))

    def norm(self, x: Sequence):
        return self.pair(x, x)

    def to_ambient(self, x: Sequence) -> Vector:
        if self.basis is None:
            raise ValueError("lattice has no ambient embedding")
        return self.basis.vmul(x)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<HermitianLattice{label} rank={self.rank}>"


# -- signature ----------------------------------------------------------------


class Signature(NamedTuple):
    positives: int
    negatives: int

    def __str__(self):
        return f"({self.positives},{self.negatives})"


def _re(x) -> Fraction:
    if isinstance(x, EisensteinScalar):
        return x.real_part()
    return Fraction(2 * x.a - x.b, 2)


def trace_form(gram: Matrix) -> list[list[Fraction]]:
    """Real symmetric ``2n x 2n`` matrix of ``Re(x, y)`` on the Z-basis ``e_k, w*e_k``."""
    n = gram.rows
    w = EisensteinInt(0, 1)
    basis = []
    for k in range(n):
        for c in (EisensteinInt(1), w):
            basis.append((k, c))
    out = []
    for i, ci in basis:
        row = []
        for j, cj in basis:
            row.append(_re(ci * gram[i, j] * cj.conj()))
        out.append(row)
    return out


def _inertia(s: list[list[Fraction]]) -> tuple[int, int]:
    """Sylvester inertia by exact symmetric elimination."""
    a = [list(r) for r in s]
    n = len(a)
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for r in a:
                    r[k], r[j] = r[j], r[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    raise ValueError("degenerate form")
                # replace e_k by e_k + e_j: the new pivot is 2*a[k][j] != 0
                for c in range(n):
                    a[k][c] += a[j][c]
                for r in range(n):
                    a[r][k] += a[r][j]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
        for i in range(k + 1, n):
            a[k][i] = Fraction(0)
            a[i][k] = Fraction(0)
    return pos, neg


def gram_signature(gram: Matrix) -> Signature:
    if not gram.is_hermitian():
        raise ValueError("gram matrix is not conjugate-symmetric")
    pos, neg = _inertia(trace_form(gram))
    return Signature(pos // 2, neg // 2)


def signature(lat: HermitianLattice) -> Signature:
    return gram_signature(lat.gram)


def is_positive_definite(gram: Matrix) -> bool:
    try:
        sig = gram_signature(gram)
    except ValueError:
        return False
    return sig.negatives == 0


# -- discriminant group ---------------------------------------------------------


@dataclass(frozen=True)
class Discriminant:
    """``L^dual / L`` with explicit generator lifts.

    ``generators[i]`` (lattice coordinates over K) maps to the ``i``-th
    canonical generator of ``space``. ``columns`` selects the columns of
    ``gram @ v`` that carry the coordinates.
    """

    lattice: HermitianLattice
    space: FiniteHermitianSpace
    generators: tuple[Vector, ...]
    transform: Matrix  # gram @ v from the Smith form
    columns: tuple[int, ...]

    def coords(self, x: Sequence) -> tuple:
        """Element of the space represented by a dual vector ``x``."""
        y = self.transform.vmul(x)
        # V is unimodular, so y is integral iff x is in the dual
        if any(isinstance(val, EisensteinScalar) for val in y):
            raise ValueError("vector is not in the dual lattice")
        return tuple(reduce_mod(y[c], d) for c, d in zip(self.columns, self.space.invariant_factors))

    def lift(self, element: Sequence) -> Vector:
        n = self.lattice.rank
        acc = [EisensteinScalar(0)] * n
        for c, g in zip(element, self.generators):
            acc = [a + c * b for a, b in zip(acc, g)]
        return tuple(_entry(a) for a in acc)

    def in_dual(self, x: Sequence) -> bool:
        return all(not isinstance(v, EisensteinScalar) for v in self.lattice.gram.vmul(x))


def discriminant(lat: HermitianLattice, name: str = "") -> Discriminant:
    g = lat.gram
    if lat.rank == 0:
        return Discriminant(lat, trivial_space(), (), _empty(), ())
    res = snf(g)
    diag = res.diagonal()
    if not all(diag):
        raise ValueError("degenerate gram matrix")
    keep = [i for i, d in enumerate(diag) if not d.is_unit()]
    gens = []
    for i in keep:
        d = diag[i]
        gens.append(tuple(_entry(EisensteinScalar(x) / d) for x in res.u.row(i)))
    form = []
    for x in gens:
        form.append(tuple(EisensteinScalar.coerce(lat.pair(x, y)) for y in gens))
    space = FiniteHermitianSpace(tuple(diag[i] for i in keep), tuple(form),
                                 name=name or (f"D({lat.name})" if lat.name else ""))
    return Discriminant(lat, space, tuple(gens), g @ res.v, tuple(keep))


def discriminant_group(lat: HermitianLattice) -> FiniteHermitianSpace:
    return discriminant(lat).space


# -- short vectors ------------------------------------------------------------


class ShortVectorSet(NamedTuple):
    norm_target: int
    vectors: tuple[Vector, ...]

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def _upper_decomposition(s: list[list[Fraction]]) -> list[list[Fraction]]:
    """``q`` with ``z S z^T = sum_i q_ii (z_i + sum_{j>i} q_ij z_j)^2``."""
    n = len(s)
    q = [list(r) for r in s]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("enumeration requires definite lattice")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _definite_sign(gram: Matrix) -> int:
    try:
        sig = gram_signature(gram)
    except ValueError:
        raise ValueError("enumeration requires definite lattice") from None
    if sig.negatives == 0:
        return 1
    if sig.positives == 0:
        return -1
    raise ValueError("enumeration requires definite lattice")


def _enumerate(gram: Matrix, bound) -> Iterator[tuple[int, ...]]:
    """Integer vectors ``z`` of the trace form with ``0 < Q(z) <= bound``."""
    q = _upper_decomposition(trace_form(gram))
    m = len(q)
    z = [0] * m
    bound = Fraction(bound)

    def rec(i: int, remaining: Fraction):
        if i < 0:
            if any(z):
                yield tuple(z)
            return
        c = sum((q[i][j] * z[j] for j in range(i + 1, m)), Fraction(0))
        r = remaining / q[i][i]
        s = math.sqrt(float(r)) if r > 0 else 0.0
        lo = math.floor(float(-c) - s) - 1
        hi = math.ceil(float(-c) + s) + 1
        for v in range(lo, hi + 1):
            t = (v + c) ** 2
            if t <= r:
                z[i] = v
                yield from rec(i - 1, remaining - q[i][i] * t)
        z[i] = 0

    yield from rec(m - 1, bound)


def enumerate_vectors(gram: Matrix, bound) -> list[Vector]:
    """All nonzero ``x`` with ``|(x, x)| <= bound`` in a definite lattice, canonically ordered."""
    sign = _definite_sign(gram)
    g = gram if sign > 0 else -gram
    out = []
    for z in _enumerate(g, bound):
        out.append(tuple(EisensteinInt(z[2 * k], z[2 * k + 1]) for k in range(gram.rows)))
    return sorted(out, key=vec_key)


def _short(gram: Matrix, target: int) -> tuple[Vector, ...]:
    sign = _definite_sign(gram)
    t = int(target)
    if t * sign <= 0:
        return ()
    g = gram if sign > 0 else -gram
    want = EisensteinInt(abs(t))
    out = []
    for z in _enumerate(g, abs(t)):
        x = tuple(EisensteinInt(z[2 * k], z[2 * k + 1]) for k in range(gram.rows))
        if dot(g.vmul(x), vec_conj(x)) == want:
            out.append(x)
    return tuple(sorted(out, key=vec_key))


def short_vectors(lat: HermitianLattice | Matrix, norm: int) -> ShortVectorSet:
    """All lattice vectors of the given norm (definite lattices only)."""
    gram = lat.gram if isinstance(lat, HermitianLattice) else lat
    return ShortVectorSet(int(norm), _short(gram, norm))


def min_nonzero_norm(gram: Matrix | HermitianLattice) -> int:
    """Minimum of ``(v, v)`` over nonzero ``v`` of a positive definite lattice."""
    if isinstance(gram, HermitianLattice):
        gram = gram.gram
    if _definite_sign(gram) < 0:
        raise ValueError("enumeration requires definite lattice")
    cap = min(gram[i, i].a for i in range(gram.rows))
    vecs = enumerate_vectors(gram, cap)
    return min(dot(gram.vmul(v), vec_conj(v)).a for v in vecs)


def min_vector(gram: Matrix) -> Vector:
    """A canonical (lexicographically first) vector attaining the minimum."""
    m = min_nonzero_norm(gram)
    return short_vectors(gram, m).vectors[0]


# -- sublattices ----------------------------------------------------------------


def _basis_of(sub) -> Matrix:
    if isinstance(sub, HermitianLattice):
        if sub.basis is None:
            raise ValueError("sublattice needs an ambient embedding")
        return sub.basis
    return sub


def orthogonal_complement(sub, ambient: HermitianLattice, name: str = "") -> HermitianLattice:
    """``{x in ambient : (x, s) = 0 for all rows s}``, in ambient coordinates."""
    rows = _basis_of(sub)
    g = ambient.gram
    n = ambient.rank
    if rows.rows == 0:
        basis = Matrix.identity(n)
    else:
        k = left_kernel(g @ rows.H)
        basis = k if k.rows else _empty(0, n)
    return HermitianLattice.from_basis(basis, g, name=name)


def saturation(sub: HermitianLattice, name: str = "") -> HermitianLattice:
    """``(K-span of sub) ∩ ambient``, as a lattice with HNF basis."""
    b = _basis_of(sub)
    if not b.is_integral():
        raise ValueError("saturation needs an integral sublattice basis")
    if b.rows == 0:
        return sub
    res = snf(b)
    r = res.rank()
    if r != b.rows:
        raise ValueError("sublattice basis rows are dependent")
    vinv = _unimodular_inverse(res.v)
    basis = hnf_row_reduce(Matrix(vinv.entries[:r], cols=b.cols))
    return HermitianLattice.from_basis(basis, sub.ambient_gram, name=name or sub.name)


def _unimodular_inverse(m: Matrix) -> Matrix:
    from .linalg import k_inverse

    return k_inverse(m).integral()


def same_span(a: Matrix, b: Matrix) -> bool:
    return hnf_row_reduce(a) == hnf_row_reduce(b)


def is_primitive(sub: HermitianLattice) -> bool:
    return same_span(saturation(sub).basis, sub.basis)


def basis_index(basis: Matrix) -> Fraction:
    """``N(det basis)``: the index of a full-rank sublattice, or its inverse for an overlattice."""
    d = det(basis)
    return EisensteinScalar.coerce(d).norm()


# -- overlattices --------------------------------------------------------------


def overlattice_from_isotropic(lat: HermitianLattice, lifts: Sequence[Sequence],
                               name: str = "") -> HermitianLattice:
    """Lattice generated by ``lat`` and dual-vector lifts (lattice coordinates).

    The result's ambient is ``lat`` itself, with a HNF basis over K.
    """
    n = lat.rank
    g = lat.gram
    for x in lifts:
        if len(x) != n:
            raise ValueError("lift has the wrong length")
        if any(isinstance(v, EisensteinScalar) for v in g.vmul(x)):
            raise ValueError("lift is not in the dual lattice")
    gens = stack(Matrix.identity(n), Matrix(list(lifts), cols=n)) if lifts else Matrix.identity(n)
    scaled, den = clear_denominators(gens)
    h = hnf_row_reduce(scaled)
    basis = h.scale(EisensteinScalar(1, den))
    gram = _gram(basis, g)
    if not gram.is_integral():
        raise ValueError("subspace not isotropic")
    return HermitianLattice(gram, g, basis, name=name)


# -- constructions ----------------------------------------------------------------


def direct_sum(*lats: HermitianLattice, name: str = "") -> HermitianLattice:
    gram = block_diag(*(l.gram for l in lats))
    if all(l.has_ambient for l in lats):
        return HermitianLattice(gram, block_diag(*(l.ambient_gram for l in lats)),
                                block_diag(*(l.basis for l in lats)), name=name)
    return HermitianLattice(gram, name=name)


def scaled(lat: HermitianLattice, c: int, name: str = "") -> HermitianLattice:
    """The lattice with form multiplied by a rational integer."""
    return HermitianLattice(lat.gram.scale(c), name=name)


# -- isometries of definite lattices -----------------------------------------------


def _gram_of(lat) -> Matrix:
    return lat.gram if isinstance(lat, HermitianLattice) else lat


def isometries(src, dst, *, first_only: bool = False, limit: int | None = None) -> list[Matrix]:
    """All ``U`` over Z[w] with ``U @ G_dst @ U.H == G_src`` (definite lattices).

    Row ``i`` of ``U`` is the image of the ``i``-th basis vector of ``src``
    in ``dst`` coordinates. Basis vectors with the fewest candidate images
    are placed first.
    """
    g1, g2 = _gram_of(src), _gram_of(dst)
    if g1.rows != g2.rows:
        raise ValueError("lattices have different ranks")
    n = g1.rows
    if n == 0:
        return [Matrix([], cols=0)]
    s1, s2 = _definite_sign(g1), _definite_sign(g2)
    if s1 != s2 or det(g1) != det(g2):
        return []
    cache: dict = {}
    cands = []
    for i in range(n):
        t = g1[i, i].a
        if t not in cache:
            vs = _short(g2, t)
            cache[t] = [(v, g2.vmul(v)) for v in vs]
        cands.append(cache[t])
    order = sorted(range(n), key=lambda i: (len(cands[i]), i))
    out: list[Matrix] = []
    chosen: dict[int, tuple] = {}

    def ok(i, v):
        for j, (w, gw) in chosen.items():
            # (v, w) = v G conj(w)^T = conj((w, v)) = conj(w G conj(v)^T)
            if dot(gw, vec_conj(v)).conj() != g1[i, j]:
                return False
        return True

    def rec(k):
        if first_only and out:
            return
        if limit is not None and len(out) >= limit:
            raise RuntimeError(f"isometry enumeration exceeded {limit}")
        if k == n:
            out.append(Matrix([chosen[i][0] for i in range(n)], cols=n))
            return
        i = order[k]
        for v, gv in cands[i]:
            if ok(i, v):
                chosen[i] = (v, gv)
                rec(k + 1)
                del chosen[i]

    rec(0)
    return out


def is_isometric_definite(l1, l2) -> Matrix | None:
    """An isometry witness ``U`` with ``U @ G2 @ U.H == G1``, or ``None``."""
    for g in (_gram_of(l1), _gram_of(l2)):
        _definite_sign(g)
    found = isometries(l1, l2, first_only=True)
    return found[0] if found else None
