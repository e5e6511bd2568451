"""Finite groups given by generators, materialized by breadth-first closure.

Elements only need ``@`` (composition, applied left to right), hashing and a
``sort_key()``; both :class:`~eisenlattice.linalg.Matrix` and
:class:`~eisenlattice.finite_space.TorsionMap` qualify.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Hashable, Iterable, Sequence

DEFAULT_CAP = 100_000


class GroupTooLarge(RuntimeError):
    """Raised when a closure exceeds its element cap."""


class MatrixGroup:
    """A finite group of matrices (or matrix-like maps).

    ``gram``, when given, is the hermitian form every element preserves:
    ``g @ gram @ g.H == gram``.
    """

    def __init__(self, generators: Sequence, identity, *, gram=None, cap: int = DEFAULT_CAP,
                 elements: Sequence | None = None, name: str = ""):
        self.generators = tuple(dict.fromkeys(generators))
        self.identity = identity
        self.gram = gram
        self.cap = cap
        self.name = name
        self._elements = None
        self._index = None
        if elements is not None:
            self._set_elements(elements)

    def _set_elements(self, elements: Iterable):
        self._elements = tuple(sorted(set(elements), key=lambda g: g.sort_key()))
        self._index = frozenset(self._elements)

    # -- closure ------------------------------------------------------------
    def closure(self) -> "MatrixGroup":
        if self._elements is None:
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in self.generators:
                        y = x @ g
                        if y not in seen:
                            seen.add(y)
                            if len(seen) > self.cap:
                                raise GroupTooLarge(
                                    f"group not finite within cap {self.cap}"
                                )
                            nxt.append(y)
                frontier = nxt
            self._set_elements(seen)
        return self

    @property
    def elements(self) -> tuple:
        return self.closure()._elements

    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order()

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        self.closure()
        return g in self._index

    def element_set(self) -> frozenset:
        self.closure()
        return self._index

    def same_elements(self, other: "MatrixGroup") -> bool:
        return self.elements == other.elements

    # -- structure ----------------------------------------------------------
    def element_order(self, g) -> int:
        k, x = 1, g
        while x != self.identity:
            x = x @ g
            k += 1
            if k > self.cap:
                raise GroupTooLarge("element of unbounded order")
        return k

    def order_statistics(self) -> dict[int, int]:
        return dict(sorted(Counter(self.element_order(g) for g in self.elements).items()))

    def is_abelian(self) -> bool:
        gens = self.generators or (self.identity,)
        return all(a @ b == b @ a for a in gens for b in gens)

    def center(self) -> list:
        gens = self.generators
        return [z for z in self.elements if all(z @ g == g @ z for g in gens)]

    def involutions(self) -> list:
        return [g for g in self.elements if g != self.identity and g @ g == self.identity]

    def subgroup(self, generators: Sequence, name: str = "") -> "MatrixGroup":
        return MatrixGroup(generators, self.identity, gram=self.gram, cap=self.cap, name=name)

    def minimal_generators(self) -> "MatrixGroup":
        """Greedy generating subset of the materialized elements (deterministic)."""
        gens: list = []
        span = {self.identity}
        for g in self.elements:
            if g not in span:
                gens.append(g)
                span = set(MatrixGroup(gens, self.identity, cap=self.cap).elements)
                if len(span) == self.order():
                    break
        return MatrixGroup(gens, self.identity, gram=self.gram, cap=self.cap,
                           elements=self.elements, name=self.name)

    def __repr__(self):
        size = len(self._elements) if self._elements is not None else "?"
        label = f" {self.name}" if self.name else ""
        return f"<MatrixGroup{label} order={size} gens={len(self.generators)}>"


def orbits(generators: Iterable, points: Sequence[Hashable],
           act: Callable) -> list[list]:
    """Partition ``points`` into orbits of the group generated by ``generators``.

    ``act(point, g)`` is the action. The first point of each orbit is its
    earliest member in ``points``, so canonically ordered input gives
    canonical representatives. Images outside ``points`` stay in their orbit;
    callers detect a non-invariant set by comparing sizes.
    """
    elements = list(generators)
    remaining = dict.fromkeys(points)
    result = []
    for p in points:
        if p not in remaining:
            continue
        orbit = [p]
        seen = {p}
        for x in orbit:
            for g in elements:
                y = act(x, g)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
        for x in orbit:
            remaining.pop(x, None)
        result.append(orbit)
    return result
