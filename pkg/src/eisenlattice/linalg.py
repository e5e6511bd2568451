"""Exact vectors and matrices over Z[w] and its fraction field K.

Vectors are tuples of ring elements and are always row vectors; a matrix
acts by ``v -> v @ M``. Entries of a :class:`Matrix` are either all
:class:`EisensteinInt` (an integral matrix) or contain some non-integral
:class:`EisensteinScalar`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .ring import (
    ONE,
    ZERO,
    EisensteinInt,
    EisensteinScalar,
    associate_unit,
    euclid_div,
    parse_eisenstein,
    reduce_mod,
)

Vector = tuple


def _entry(x):
    if isinstance(x, EisensteinScalar):
        return x.num if x.den == 1 else x
    if isinstance(x, EisensteinInt):
        return x
    return EisensteinInt.coerce(x)


def vec(*xs) -> Vector:
    """Build an integral row vector, accepting ints and ``(a, b)`` pairs."""
    return tuple(_entry(x) for x in xs)


def _sum(items):
    total = ZERO
    for it in items:
        total = total + it
    return total


def dot(x: Sequence, y: Sequence):
    """Bilinear product ``sum x_i * y_i`` (no conjugation)."""
    return _entry(_sum(a * b for a, b in zip(x, y)))


def vec_conj(x: Sequence) -> Vector:
    return tuple(v.conj() for v in x)


def vec_add(x: Sequence, y: Sequence) -> Vector:
    return tuple(_entry(a + b) for a, b in zip(x, y))


def vec_sub(x: Sequence, y: Sequence) -> Vector:
    return tuple(_entry(a - b) for a, b in zip(x, y))


def vec_scale(c, x: Sequence) -> Vector:
    return tuple(_entry(c * a) for a in x)


def vec_neg(x: Sequence) -> Vector:
    return tuple(-a for a in x)


def is_zero_vec(x: Sequence) -> bool:
    return not any(x)


def vec_key(x: Sequence) -> tuple:
    """Lexicographic sort key on the flattened (a, b) coordinates."""
    out = []
    for v in x:
        if isinstance(v, EisensteinScalar):
            out.extend((v.num.a, v.num.b, v.den))
        else:
            out.extend((v.a, v.b))
    return tuple(out)


class Matrix:
    """Immutable dense matrix over Z[w] or K."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        ents = tuple(tuple(_entry(x) for x in row) for row in entries)
        self.rows = len(ents)
        if self.rows:
            self.cols = len(ents[0])
            if any(len(r) != self.cols for r in ents):
                raise ValueError("ragged matrix rows")
        else:
            self.cols = 0 if cols is None else cols
        self.entries = ents
        self._hash = None

    @classmethod
    def _raw(cls, ents: tuple, cols: int) -> "Matrix":
        m = cls.__new__(cls)
        m.entries = ents
        m.rows = len(ents)
        m.cols = cols
        m._hash = None
        return m

    # -- constructors ---------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls._raw(tuple(tuple(ZERO for _ in range(c)) for _ in range(r)), c)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls(
            [[values[i] if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        return cls(rows, cols=cols)

    # -- access ---------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_integral(self) -> bool:
        return all(isinstance(x, EisensteinInt) for r in self.entries for x in r)

    # -- algebra --------------------------------------------------------
    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.col
        ocols = [cols(j) for j in range(other.cols)]
        ents = tuple(
            tuple(_entry(_sum(a * b for a, b in zip(r, c))) for c in ocols)
            for r in self.entries
        )
        return Matrix._raw(ents, other.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-x for x in r) for r in self.entries), self.cols)

    def scale(self, c) -> "Matrix":
        return Matrix([[c * x for x in r] for r in self.entries], cols=self.cols)

    def __pow__(self, n: int) -> "Matrix":
        if not self.is_square():
            raise ValueError("power of non-square matrix")
        if n < 0:
            return k_inverse(self) ** (-n)
        result, base = Matrix.identity(self.rows), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self.entries)) if self.rows else (), self.rows)

    def conj(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(x.conj() for x in r) for r in self.entries), self.cols)

    @property
    def H(self) -> "Matrix":
        """Conjugate transpose."""
        return self.conj().T

    def is_hermitian(self) -> bool:
        return self.is_square() and self == self.H

    def vmul(self, v: Sequence) -> Vector:
        """Row vector times matrix, ``v @ self``."""
        if len(v) != self.rows:
            raise ValueError("dimension mismatch")
        return tuple(
            _entry(_sum(a * b for a, b in zip(v, self.col(j)))) for j in range(self.cols)
        )

    # -- identity -------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.cols, self.entries))
        return self._hash

    def sort_key(self) -> tuple:
        return tuple(k for r in self.entries for k in vec_key(r))

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.entries]})"

    def pretty(self) -> str:
        cells = [[str(x) for x in r] for r in self.entries]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    # -- conversion -----------------------------------------------------
    def to_json(self) -> dict:
        if not self.is_integral():
            raise ValueError("only integral matrices have a JSON form")
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [x.to_pair() for r in self.entries for x in r],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Matrix":
        try:
            r, c, flat = int(obj["rows"]), int(obj["cols"]), obj["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed matrix JSON: {exc}") from None
        if len(flat) != r * c:
            raise ValueError(f"matrix JSON has {len(flat)} entries, expected {r * c}")
        xs = [parse_eisenstein(e) for e in flat]
        return cls([xs[i * c:(i + 1) * c] for i in range(r)], cols=c)

    def to_complex(self):
        import numpy as np

        return np.array([[x.to_complex() for x in r] for r in self.entries], dtype=complex)

    def integral(self) -> "Matrix":
        if not self.is_integral():
            raise ValueError("matrix has non-integral entries")
        return self


def stack(*blocks: Matrix) -> Matrix:
    """Vertical concatenation."""
    cols = {b.cols for b in blocks if b.rows}
    if len(cols) > 1:
        raise ValueError("column mismatch in stack")
    c = cols.pop() if cols else blocks[0].cols
    return Matrix([r for b in blocks for r in b.entries], cols=c)


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = [[ZERO] * m for _ in range(n)]
    i0 = j0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[i0 + i][j0 + j] = b[i, j]
        i0 += b.rows
        j0 += b.cols
    return Matrix(out, cols=m)


def hermitian_pair(x: Sequence, y: Sequence, gram: Matrix):
    """The form value ``x @ gram @ conj(y)^T``; linear in ``x``."""
    if len(x) != gram.rows or len(y) != gram.cols:
        raise ValueError(
            f"dimension mismatch: vectors of length {len(x)}, {len(y)} for gram {gram.shape}"
        )
    return dot(gram.vmul(x), vec_conj(y))


def gram_of(basis: Matrix, gram: Matrix) -> Matrix:
    """Gram matrix of the rows of ``basis`` under ``gram``."""
    return basis @ gram @ basis.H


# -- determinants -----------------------------------------------------------


def _bareiss(rows: list[list[EisensteinInt]]) -> EisensteinInt:
    n = len(rows)
    if n == 0:
        return ONE
    a = [list(r) for r in rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        p = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * p - a[i][k] * a[k][j]).exact_div(prev)
        prev = p
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def det(m: Matrix):
    """Exact determinant; integral input gives an EisensteinInt."""
    if not m.is_square():
        raise ValueError(f"determinant of non-square {m.shape} matrix")
    if m.is_integral():
        return _bareiss([list(r) for r in m.entries])
    rows = []
    scale = 1
    for r in m.entries:
        dens = [x.den for x in r if isinstance(x, EisensteinScalar)]
        l = math.lcm(*dens) if dens else 1
        scale *= l
        rows.append([(x * l).num if isinstance(x, EisensteinScalar) else x * l for x in r])
    return _entry(EisensteinScalar(_bareiss(rows), scale))


def k_inverse(m: Matrix) -> Matrix:
    """Exact inverse over K by Gauss-Jordan elimination."""
    if not m.is_square():
        raise ValueError("inverse of non-square matrix")
    n = m.rows
    a = [[EisensteinScalar.coerce(x) for x in r] + [EisensteinScalar.coerce(ONE if i == j else ZERO) for j in range(n)]
         for i, r in enumerate(m.entries)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        inv = a[k][k].inverse()
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return Matrix([r[n:] for r in a])


def is_unimodular(m: Matrix) -> bool:
    """True iff ``m`` is integral, square and its determinant is a unit."""
    return m.is_square() and m.is_integral() and det(m).norm() == 1


# -- normal forms -----------------------------------------------------------


@dataclass(frozen=True)
class SnfResult:
    """``u @ m @ v == d`` with ``d`` diagonal, ``d_1 | d_2 | ...`` canonical."""

    u: Matrix
    d: Matrix
    v: Matrix

    def diagonal(self) -> list[EisensteinInt]:
        return [self.d[i, i] for i in range(min(self.d.rows, self.d.cols))]

    def invariant_factors(self) -> list[EisensteinInt]:
        """Nonzero diagonal entries."""
        return [x for x in self.diagonal() if x]

    def rank(self) -> int:
        return len(self.invariant_factors())


def _require_integral(m: Matrix):
    if not m.is_integral():
        raise ValueError("normal forms need an integral matrix")


def snf(m: Matrix) -> SnfResult:
    """Smith normal form over Z[w] with unimodular transforms."""
    _require_integral(m)
    r, c = m.shape
    a = [list(row) for row in m.entries]
    u = [list(row) for row in Matrix.identity(r).entries]
    v = [list(row) for row in Matrix.identity(c).entries]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] = row[dst] + q * row[src]
        for row in v:
            row[dst] = row[dst] + q * row[src]

    for t in range(min(r, c)):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = a[i][j]
                if x and (best is None or x.norm() < best[0]):
                    best = (x.norm(), i, j)
        if best is None:
            break
        _, i0, j0 = best
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            # pivot on the smallest entry of row t / column t
            best = (a[t][t].norm(), t, t)
            for i in range(t + 1, r):
                if a[i][t] and a[i][t].norm() < best[0]:
                    best = (a[i][t].norm(), i, t)
            for j in range(t + 1, c):
                if a[t][j] and a[t][j].norm() < best[0]:
                    best = (a[t][j].norm(), t, j)
            if best[1] != t:
                swap_rows(t, best[1])
            if best[2] != t:
                swap_cols(t, best[2])
            p = a[t][t]
            clean = True
            for i in range(t + 1, r):
                if a[i][t]:
                    q, rem = euclid_div(a[i][t], p)
                    add_row(i, t, -q)
                    clean = clean and not rem
            for j in range(t + 1, c):
                if a[t][j]:
                    q, rem = euclid_div(a[t][j], p)
                    add_col(j, t, -q)
                    clean = clean and not rem
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if not p.divides(a[i][j])),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, ONE)
        unit = associate_unit(a[t][t])
        a[t] = [unit * x for x in a[t]]
        u[t] = [unit * x for x in u[t]]
    return SnfResult(Matrix(u, cols=r), Matrix(a, cols=c), Matrix(v, cols=c))


def hnf_row_reduce(m: Matrix) -> Matrix:
    """Canonical row-echelon basis of the row span of ``m`` over Z[w].

    Pivots are canonical associates and entries above a pivot are canonical
    residues modulo it, so two matrices have the same row span iff their
    HNFs are equal. Zero rows are dropped.
    """
    _require_integral(m)
    a = [list(row) for row in m.entries]
    r, c = m.shape
    prow = 0
    for j in range(c):
        if prow >= r:
            break
        while True:
            live = [i for i in range(prow, r) if a[i][j]]
            if not live:
                break
            i0 = min(live, key=lambda i: (a[i][j].norm(), i))
            a[prow], a[i0] = a[i0], a[prow]
            p = a[prow][j]
            done = True
            for i in range(prow + 1, r):
                if a[i][j]:
                    q, rem = euclid_div(a[i][j], p)
                    a[i] = [x - q * y for x, y in zip(a[i], a[prow])]
                    done = done and not rem
            if done:
                break
        if not any(a[i][j] for i in range(prow, r)):
            continue
        unit = associate_unit(a[prow][j])
        a[prow] = [unit * x for x in a[prow]]
        p = a[prow][j]
        for i in range(prow):
            x = a[i][j]
            rep = reduce_mod(x, p)
            if x != rep:
                q = (x - rep).exact_div(p)
                a[i] = [y - q * z for y, z in zip(a[i], a[prow])]
        prow += 1
    return Matrix([row for row in a[:prow]], cols=c)


def left_kernel(m: Matrix) -> Matrix:
    """Z[w]-basis (in HNF) of ``{x : x @ m == 0}``; the result is saturated."""
    res = snf(m)
    k = res.rank()
    return hnf_row_reduce(Matrix(res.u.entries[k:], cols=m.rows))


def row_span_contains(basis: Matrix, x: Sequence) -> bool:
    """Membership of ``x`` in the Z[w]-row span of ``basis``."""
    h = hnf_row_reduce(basis)
    return hnf_row_reduce(stack(h, Matrix([x]))) == h


def clear_denominators(m: Matrix) -> tuple[Matrix, int]:
    """Return ``(n * m, n)`` with ``n`` the least positive integer making ``n*m`` integral."""
    dens = [x.den for r in m.entries for x in r if isinstance(x, EisensteinScalar)]
    n = math.lcm(*dens) if dens else 1
    return m.scale(n), n


def solve_left(m: Matrix, y: Sequence) -> Vector:
    """Unique ``x`` over K with ``x @ m == y`` for square invertible ``m``."""
    return k_inverse(m).vmul(y)
