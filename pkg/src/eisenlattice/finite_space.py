"""Finite hermitian spaces: torsion Z[w]-modules with a K/Z[w]-valued form.

A space is ``Z[w]/(d_1) + ... + Z[w]/(d_k)`` with canonical generators
``g_1..g_k``; elements are tuples of canonical residues ``x_i mod d_i``.
The form is stored as its matrix on generators, each value reduced to the
canonical representative of K/Z[w].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from .matgroup import MatrixGroup, orbits
from .ring import (
    THETA,
    ZERO,
    EisensteinInt,
    EisensteinScalar,
    canonical_associate,
    reduce_mod,
    residues,
)

Element = tuple  # tuple of EisensteinInt residues

_THETA_CANON = canonical_associate(THETA)


def _kval(x) -> EisensteinScalar:
    return EisensteinScalar.coerce(x).mod_integers()


@dataclass(frozen=True)
class FiniteHermitianSpace:
    invariant_factors: tuple[EisensteinInt, ...]
    form: tuple[tuple[EisensteinScalar, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        factors = tuple(canonical_associate(d) for d in self.invariant_factors)
        if any(d.is_unit() for d in factors):
            raise ValueError("unit invariant factors must be dropped")
        k = len(factors)
        if len(self.form) != k or any(len(r) != k for r in self.form):
            raise ValueError("form matrix must be k x k for k generators")
        form = tuple(tuple(_kval(x) for x in row) for row in self.form)
        for i in range(k):
            for j in range(k):
                if form[i][j] != form[j][i].conj().mod_integers():
                    raise ValueError("form is not conjugate-symmetric in K/Z[w]")
        object.__setattr__(self, "invariant_factors", factors)
        object.__setattr__(self, "form", form)

    # -- module structure ---------------------------------------------------
    @property
    def ngens(self) -> int:
        return len(self.invariant_factors)

    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d.norm()
        return n

    def __len__(self):
        return self.order()

    def zero(self) -> Element:
        return tuple(ZERO for _ in self.invariant_factors)

    def generator(self, i: int) -> Element:
        return tuple(
            reduce_mod(1 if j == i else 0, d) for j, d in enumerate(self.invariant_factors)
        )

    def reduce(self, x: Sequence) -> Element:
        return tuple(reduce_mod(v, d) for v, d in zip(x, self.invariant_factors))

    def add(self, x: Element, y: Element) -> Element:
        return self.reduce([a + b for a, b in zip(x, y)])

    def scale(self, c, x: Element) -> Element:
        c = EisensteinInt.coerce(c)
        return self.reduce([c * a for a in x])

    def neg(self, x: Element) -> Element:
        return self.reduce([-a for a in x])

    def elements(self) -> list[Element]:
        return list(itertools.product(*(list(residues(d)) for d in self.invariant_factors)))

    def annihilated_by(self, d, x: Element) -> bool:
        return not any(self.scale(d, x))

    def pair(self, x: Element, y: Element) -> EisensteinScalar:
        total = EisensteinScalar(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    total = total + xi * self.form[i][j] * yj.conj()
        return total.mod_integers()

    @cached_property
    def _nondegenerate(self) -> bool:
        elems = self.elements()
        zero = EisensteinScalar(0)
        for x in elems:
            if any(x) and all(self.pair(x, y) == zero for y in elems):
                return False
        return True

    def is_nondegenerate(self) -> bool:
        return self._nondegenerate

    @cached_property
    def _f3(self) -> bool:
        return all(d == _THETA_CANON for d in self.invariant_factors)

    def is_f3_space(self) -> bool:
        return self._f3

    # -- constructions ------------------------------------------------------
    def twist(self) -> "FiniteHermitianSpace":
        """Same module with the negated form, ``W(-1)``."""
        name = self.name[:-4] if self.name.endswith("(-1)") else (self.name + "(-1)" if self.name else "")
        return FiniteHermitianSpace(
            self.invariant_factors, tuple(tuple(-x for x in r) for r in self.form), name=name
        )

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"<FiniteHermitianSpace {label}factors={[str(d) for d in self.invariant_factors]} order={self.order()}>"


def make_V() -> FiniteHermitianSpace:
    """``(Z[w]/theta)^2`` with form ``[[0, theta/3], [-theta/3, 0]]``."""
    t3 = EisensteinScalar(THETA, 3)
    return FiniteHermitianSpace(
        (THETA, THETA), ((EisensteinScalar(0), t3), (-t3, EisensteinScalar(0))), name="V"
    )


def trivial_space() -> FiniteHermitianSpace:
    return FiniteHermitianSpace((), (), name="0")


def twist(space: FiniteHermitianSpace) -> FiniteHermitianSpace:
    return space.twist()


def direct_sum(*spaces: FiniteHermitianSpace) -> FiniteHermitianSpace:
    factors = tuple(d for s in spaces for d in s.invariant_factors)
    k = len(factors)
    form = [[EisensteinScalar(0)] * k for _ in range(k)]
    off = 0
    for s in spaces:
        for i in range(s.ngens):
            for j in range(s.ngens):
                form[off + i][off + j] = s.form[i][j]
        off += s.ngens
    name = " + ".join(s.name for s in spaces if s.name)
    return FiniteHermitianSpace(factors, tuple(map(tuple, form)), name=name)


class TorsionMap:
    """Module homomorphism of a finite space, given by generator images.

    Composition follows the row-vector convention: ``(f @ g)(x) = g(f(x))``.
    On F_3-spaces the map is kept as an integer matrix mod 3.
    """

    __slots__ = ("space", "_images", "_f3", "_hash")

    def __init__(self, space: FiniteHermitianSpace, images: Sequence[Element] = (),
                 *, f3: tuple | None = None):
        self.space = space
        if f3 is None:
            imgs = tuple(space.reduce(y) for y in images)
            if space.is_f3_space():
                f3 = tuple(tuple(v.a for v in img) for img in imgs)
                imgs = None
            self._images = imgs
        else:
            self._images = None
        self._f3 = f3
        self._hash = hash(f3 if f3 is not None else self._images)

    @classmethod
    def identity(cls, space: FiniteHermitianSpace) -> "TorsionMap":
        return cls(space, [space.generator(i) for i in range(space.ngens)])

    @property
    def images(self) -> tuple:
        if self._images is None:
            self._images = tuple(tuple(EisensteinInt(v) for v in row) for row in self._f3)
        return self._images

    def apply(self, x: Element) -> Element:
        if self._f3 is not None:
            xs = [v.a for v in self.space.reduce(x)]
            k = len(xs)
            return tuple(
                EisensteinInt(sum(xs[i] * self._f3[i][j] for i in range(k)) % 3) for j in range(k)
            )
        out = [ZERO] * self.space.ngens
        for xi, img in zip(x, self.images):
            if xi:
                for j, v in enumerate(img):
                    out[j] = out[j] + xi * v
        return self.space.reduce(out)

    def __matmul__(self, other: "TorsionMap") -> "TorsionMap":
        if self._f3 is not None and other._f3 is not None:
            a, b = self._f3, other._f3
            k = len(a)
            prod = tuple(
                tuple(sum(a[i][l] * b[l][j] for l in range(k)) % 3 for j in range(k))
                for i in range(k)
            )
            return TorsionMap(self.space, f3=prod)
        return TorsionMap(self.space, [other.apply(y) for y in self.images])

    def _key(self):
        return self._f3 if self._f3 is not None else self._images

    def __eq__(self, other):
        return isinstance(other, TorsionMap) and self._key() == other._key()

    def __hash__(self):
        return self._hash

    def sort_key(self) -> tuple:
        if self._f3 is not None:
            return tuple(v for row in self._f3 for v in row)
        return tuple(k for img in self._images for v in img for k in (v.a, v.b))

    def preserves_form(self) -> bool:
        s = self.space
        k = s.ngens
        imgs = self.images
        return all(
            s.pair(imgs[i], imgs[j]) == s.form[i][j] for i in range(k) for j in range(k)
        )

    def f3_matrix(self) -> list[list[int]]:
        """Matrix over F_3 whose rows are the images of the generators."""
        if self._f3 is None:
            raise ValueError("not an F_3 space")
        return [list(r) for r in self._f3]

    def __repr__(self):
        if self._f3 is not None:
            return f"TorsionMap(F3 {[list(r) for r in self._f3]})"
        return f"TorsionMap({[[str(v) for v in img] for img in self._images]})"


MAX_BRUTE_FORCE_ORDER = 10_000


def aut_group(space: FiniteHermitianSpace, cap: int = 10**6) -> MatrixGroup:
    """All form-preserving module automorphisms, by backtracking over generator images.

    The pairing between all element pairs is tabulated once; candidate images
    for generator ``i`` are then intersections of precomputed level sets.
    """
    n = space.order()
    if n > MAX_BRUTE_FORCE_ORDER:
        raise ValueError(f"space of order {n} exceeds brute-force limit {MAX_BRUTE_FORCE_ORDER}")
    ident = TorsionMap.identity(space)
    k = space.ngens
    label = f"Aut({space.name})" if space.name else ""
    if k == 0:
        return MatrixGroup([], ident, elements=[ident], name=label)
    elems = space.elements()
    values: dict = {}
    table = [[values.setdefault(space.pair(x, y), len(values)) for y in elems] for x in elems]
    target = [[values.get(space.form[i][j], -1) for j in range(k)] for i in range(k)]
    level: dict = {}
    for yi in range(n):
        row = table[yi]
        for ci in range(n):
            level.setdefault((ci, row[ci]), set()).add(yi)
    cands = [
        {yi for yi, y in enumerate(elems)
         if space.annihilated_by(d, y) and table[yi][yi] == target[i][i]}
        for i, d in enumerate(space.invariant_factors)
    ]
    nondeg = space.is_nondegenerate()
    found = []

    def extend(chosen):
        i = len(chosen)
        if i == k:
            m = TorsionMap(space, [elems[c] for c in chosen])
            if nondeg or _is_bijective(m):
                found.append(m)
                if len(found) > cap:
                    raise RuntimeError("automorphism enumeration exceeded cap")
            return
        pool = cands[i]
        for j, c in enumerate(chosen):
            pool = pool & level.get((c, target[i][j]), set())
            if not pool:
                return
        for y in sorted(pool):
            extend(chosen + [y])

    extend([])
    group = MatrixGroup([], ident, elements=found, name=label)
    return group.minimal_generators()


def _is_bijective(m: TorsionMap) -> bool:
    s = m.space
    return len({m.apply(x) for x in s.elements()}) == s.order()


def isomorphisms(src: FiniteHermitianSpace, dst: FiniteHermitianSpace,
                 first_only: bool = False) -> list[list[Element]]:
    """Form-preserving isomorphisms ``src -> dst`` as lists of generator images."""
    if src.order() != dst.order():
        return []
    elems = dst.elements()
    k = src.ngens
    out = []

    def extend(chosen):
        if first_only and out:
            return
        i = len(chosen)
        if i == k:
            images = set()
            for coeffs in itertools.product(*(list(residues(d)) for d in src.invariant_factors)):
                acc = dst.zero()
                for c, y in zip(coeffs, chosen):
                    acc = dst.add(acc, dst.scale(c, y))
                images.add(acc)
            if len(images) == dst.order():
                out.append(list(chosen))
            return
        d = src.invariant_factors[i]
        for y in elems:
            if not dst.annihilated_by(d, y):
                continue
            if dst.pair(y, y) != src.form[i][i]:
                continue
            if all(dst.pair(y, chosen[j]) == src.form[i][j] for j in range(i)):
                extend(chosen + [y])

    extend([])
    return out


def find_isomorphism(src: FiniteHermitianSpace, dst: FiniteHermitianSpace):
    found = isomorphisms(src, dst, first_only=True)
    return found[0] if found else None


def is_isomorphic(src: FiniteHermitianSpace, dst: FiniteHermitianSpace) -> bool:
    return find_isomorphism(src, dst) is not None


# -- subspaces --------------------------------------------------------------


@dataclass(frozen=True)
class TorsionSubgroup:
    """F_3-subspace given by its reduced row-echelon basis (entries 0, 1, 2)."""

    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[tuple[int, ...]]:
        n = len(self.basis[0]) if self.basis else 0
        out = set()
        for coeffs in itertools.product(range(3), repeat=self.dim):
            v = [0] * n
            for c, b in zip(coeffs, self.basis):
                v = [(x + c * y) % 3 for x, y in zip(v, b)]
            out.add(tuple(v))
        return sorted(out)

    def elements(self, space: FiniteHermitianSpace) -> list[Element]:
        return [space.reduce([EisensteinInt(v) for v in vec]) for vec in self.vectors()]

    def __repr__(self):
        return f"TorsionSubgroup({[list(b) for b in self.basis]})"


def rref_f3(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    m = [[x % 3 for x in r] for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    out, prow = [], 0
    for j in range(ncols):
        piv = next((i for i in range(prow, len(m)) if m[i][j]), None)
        if piv is None:
            continue
        m[prow], m[piv] = m[piv], m[prow]
        inv = m[prow][j]  # 1 and 2 are self-inverse mod 3
        m[prow] = [(x * inv) % 3 for x in m[prow]]
        for i in range(len(m)):
            if i != prow and m[i][j]:
                f = m[i][j]
                m[i] = [(x - f * y) % 3 for x, y in zip(m[i], m[prow])]
        prow += 1
    out = [tuple(r) for r in m[:prow]]
    return tuple(out)


def subspace(rows: Sequence[Sequence[int]]) -> TorsionSubgroup:
    return TorsionSubgroup(rref_f3(rows))


def _f3_coords(space: FiniteHermitianSpace, x: Element) -> tuple[int, ...]:
    return tuple(v.a for v in space.reduce(x))  # canonical residues mod theta are 0, 1, 2


def all_subspaces_f3(n: int, dim: int) -> list[TorsionSubgroup]:
    seen = set()
    out = []
    vecs = [v for v in itertools.product(range(3), repeat=n) if any(v)]
    for combo in itertools.combinations(vecs, dim):
        b = rref_f3(combo)
        if len(b) == dim and b not in seen:
            seen.add(b)
            out.append(TorsionSubgroup(b))
    return sorted(out, key=lambda s: s.basis)


def is_isotropic(space: FiniteHermitianSpace, sub: TorsionSubgroup) -> bool:
    zero = EisensteinScalar(0)
    gens = [space.reduce([EisensteinInt(v) for v in b]) for b in sub.basis]
    return all(space.pair(x, y) == zero for x in gens for y in gens)


def isotropic_subspaces(space: FiniteHermitianSpace, dim: int) -> list[TorsionSubgroup]:
    """All isotropic F_3-subspaces of the given dimension."""
    if not space.is_f3_space():
        raise ValueError("isotropic subspace enumeration needs an F_3 vector space")
    return [s for s in all_subspaces_f3(space.ngens, dim) if is_isotropic(space, s)]


def is_graph_type(sub: TorsionSubgroup, split: int) -> bool:
    """True if ``sub`` meets neither summand of ``F_3^split + F_3^rest`` nontrivially."""
    for v in sub.vectors():
        if not any(v):
            continue
        if not any(v[split:]) or not any(v[:split]):
            return False
    return True


def act_on_subspace(sub: TorsionSubgroup, g: TorsionMap) -> TorsionSubgroup:
    space = g.space
    rows = [_f3_coords(space, g.apply(space.reduce([EisensteinInt(v) for v in b]))) for b in sub.basis]
    return subspace(rows)


class OrbitSummary(NamedTuple):
    transitive: bool
    orbit_count: int
    invariant: bool
    orbit_sizes: tuple[int, ...]


def transitivity_check(group: MatrixGroup, objects: Sequence[TorsionSubgroup]) -> OrbitSummary:
    """Orbit decomposition of ``objects`` under ``group`` acting on subspaces."""
    gens = group.generators or group.elements
    objs = list(objects)
    orbs = orbits(gens, objs, act_on_subspace)
    members = set(objs)
    invariant = all(x in members for orb in orbs for x in orb)
    return OrbitSummary(len(orbs) == 1 and invariant, len(orbs), invariant,
                        tuple(len(o) for o in orbs))


def block_map(space: FiniteHermitianSpace, parts: Sequence[TorsionMap]) -> TorsionMap:
    """Block-diagonal map on ``space = direct_sum(p.space for p in parts)``."""
    images = []
    off = 0
    n = space.ngens
    for p in parts:
        k = p.space.ngens
        for img in p.images:
            full = [ZERO] * n
            full[off:off + k] = img
            images.append(tuple(full))
        off += k
    return TorsionMap(space, images)
