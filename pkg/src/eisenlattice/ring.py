"""Exact arithmetic in the Eisenstein integers Z[w] and their fraction field.

An element ``a + b*w`` with ``w = exp(2*pi*i/3)`` is stored as the integer
pair ``(a, b)``; multiplication uses ``w**2 = -1 - w``.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union


class EisensteinInt:
    """Element ``a + b*w`` of the ring of Eisenstein integers (immutable)."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = int(a)
        self.b = int(b)

    @classmethod
    def coerce(cls, x) -> "EisensteinInt":
        if isinstance(x, EisensteinInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        if isinstance(x, (tuple, list)) and len(x) == 2:
            return cls(x[0], x[1])
        if isinstance(x, EisensteinScalar):
            if x.den != 1:
                raise ValueError(f"{x} is not an Eisenstein integer")
            return x.num
        raise TypeError(f"cannot convert {x!r} to EisensteinInt")

    # -- ring structure -------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            return EisensteinInt(self.a + other, self.b)
        if isinstance(other, EisensteinInt):
            return EisensteinInt(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, int):
            return EisensteinInt(self.a - other, self.b)
        if isinstance(other, EisensteinInt):
            return EisensteinInt(self.a - other.a, self.b - other.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return EisensteinInt(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        if isinstance(other, EisensteinInt):
            a, b, c, d = self.a, self.b, other.a, other.b
            bd = b * d
            return EisensteinInt(a * c - bd, a * d + b * c - bd)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers live in the fraction field")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        return EisensteinScalar(self) / other

    def __rtruediv__(self, other):
        return EisensteinScalar.coerce(other) / EisensteinScalar(self)

    # -- comparisons ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, EisensteinInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, EisensteinScalar):
            return other == self
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"EisensteinInt({self.a}, {self.b})"

    def __str__(self):
        return f"{self.a}{self.b:+d}*w"

    # -- structure ------------------------------------------------------
    def conj(self) -> "EisensteinInt":
        # conj(a + b w) = a + b w^2 = (a - b) - b w
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        a, b = self.a, self.b
        return a * a - a * b + b * b

    def to_complex(self) -> complex:
        return complex(self.a - self.b / 2, self.b * math.sqrt(3) / 2)

    def to_pair(self) -> list[int]:
        return [self.a, self.b]

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_rational(self) -> bool:
        return self.b == 0

    def content(self) -> int:
        return math.gcd(self.a, self.b)

    def divides(self, other) -> bool:
        other = EisensteinInt.coerce(other)
        if not self:
            return not other
        num = other * self.conj()
        n = self.norm()
        return num.a % n == 0 and num.b % n == 0

    def exact_div(self, other) -> "EisensteinInt":
        """Return ``self / other``, raising ``ValueError`` if not exact."""
        other = EisensteinInt.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero in Z[w]")
        num = self * other.conj()
        n = other.norm()
        if num.a % n or num.b % n:
            raise ValueError(f"{other} does not divide {self}")
        return EisensteinInt(num.a // n, num.b // n)


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
OMEGA2 = EisensteinInt(-1, -1)
THETA = EisensteinInt(1, 2)  # w - w^2 = 1 + 2w
UNITS = (
    ONE,
    EisensteinInt(1, 1),  # -w^2
    OMEGA,
    EisensteinInt(-1, 0),
    OMEGA2,
    EisensteinInt(0, -1),
)  # successive powers of the primitive sixth root -w^2 = 1 + w

ScalarLike = Union[int, EisensteinInt, "EisensteinScalar"]


def conj(x: EisensteinInt) -> EisensteinInt:
    return x.conj()


def norm(x: EisensteinInt) -> int:
    return EisensteinInt.coerce(x).norm()


def units() -> tuple[EisensteinInt, ...]:
    return UNITS


def _round_half_down(n: int, d: int) -> int:
    """Nearest integer to n/d (d > 0), ties toward negative infinity."""
    return -((d - 2 * n) // (2 * d))


def euclid_div(x, y) -> tuple[EisensteinInt, EisensteinInt]:
    """Return ``(q, r)`` with ``x = q*y + r`` and ``norm(r) < norm(y)``."""
    x = EisensteinInt.coerce(x)
    y = EisensteinInt.coerce(y)
    if not y:
        raise ZeroDivisionError("euclid_div by zero")
    num = x * y.conj()
    n = y.norm()
    q = EisensteinInt(_round_half_down(num.a, n), _round_half_down(num.b, n))
    r = x - q * y
    if r.norm() < n:
        return q, r
    # unreachable for Z[w]; kept as a self-check
    for da in (-1, 0, 1):
        for db in (-1, 0, 1):
            q2 = q + EisensteinInt(da, db)
            r2 = x - q2 * y
            if r2.norm() < n:
                return q2, r2
    raise ArithmeticError(f"euclidean division failed for {x} / {y}")


def canonical_associate(x) -> EisensteinInt:
    """The unit multiple ``u*x`` with ``a > b >= 0`` (argument in [0, 60) degrees)."""
    x = EisensteinInt.coerce(x)
    if not x:
        raise ValueError("zero has no canonical associate")
    for u in UNITS:
        y = u * x
        if y.a > y.b >= 0:
            return y
    raise AssertionError("no associate in the first sextant")  # pragma: no cover


def associate_unit(x) -> EisensteinInt:
    """The unit ``u`` with ``u*x == canonical_associate(x)``."""
    x = EisensteinInt.coerce(x)
    if not x:
        raise ValueError("zero has no canonical associate")
    for u in UNITS:
        y = u * x
        if y.a > y.b >= 0:
            return u
    raise AssertionError  # pragma: no cover


def unit_inverse(u: EisensteinInt) -> EisensteinInt:
    if not u.is_unit():
        raise ValueError(f"{u} is not a unit")
    return u.conj()


def gcd(x, y) -> EisensteinInt:
    """Canonical generator of the ideal ``(x, y)``."""
    return xgcd(x, y)[0]


def xgcd(x, y) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt]:
    """Return ``(g, s, t)`` with ``s*x + t*y == g`` and ``g`` canonical."""
    x = EisensteinInt.coerce(x)
    y = EisensteinInt.coerce(y)
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    r0, s0, t0 = x, ONE, ZERO
    r1, s1, t1 = y, ZERO, ONE
    while r1:
        q, r = euclid_div(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    u = associate_unit(r0)
    return u * r0, u * s0, u * t0


def ideal_basis(m) -> tuple[int, int, int]:
    return _ideal_basis(EisensteinInt.coerce(m))


@lru_cache(maxsize=4096)
def _ideal_basis(m: EisensteinInt) -> tuple[int, int, int]:
    """Lower-triangular Z-basis ``(n1, c, n2)`` of the ideal ``m*Z[w]``.

    The ideal is spanned over Z by ``(n1, 0)`` and ``(c, n2)`` in (a, b)
    coordinates, with ``n1, n2 > 0`` and ``0 <= c < n1``. Residues modulo
    ``m`` are then exactly ``a + b*w`` with ``0 <= a < n1, 0 <= b < n2``.
    """
    if not m:
        raise ValueError("ideal basis of the zero ideal")
    p, q = m.a, m.b
    # Z-generators m = (p, q) and m*w = (-q, p - q)
    g, s, t = _int_xgcd(q, p - q)
    n2 = abs(g)
    sign = 1 if g > 0 else -1
    c = sign * (s * p + t * (-q))
    n1 = m.norm() // n2
    return n1, c % n1, n2


def _int_xgcd(a: int, b: int) -> tuple[int, int, int]:
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - k * s1
        t0, t1 = t1, t0 - k * t1
    return a, s0, t0


def reduce_mod(x, m) -> EisensteinInt:
    """Canonical representative of ``x`` modulo the ideal ``m*Z[w]``."""
    x = EisensteinInt.coerce(x)
    n1, c, n2 = ideal_basis(m)
    k = x.b // n2
    a = x.a - k * c
    return EisensteinInt(a % n1, x.b - k * n2)


def residues(m) -> Iterator[EisensteinInt]:
    """All canonical residues modulo ``m``, in lexicographic (a, b) order."""
    n1, _, n2 = ideal_basis(m)
    for a in range(n1):
        for b in range(n2):
            yield EisensteinInt(a, b)


class F3:
    """Element of the residue field Z[w]/(theta), identified with F_3."""

    __slots__ = ("value",)

    def __init__(self, value: int):
        self.value = int(value) % 3

    def __add__(self, other):
        return F3(self.value + F3._v(other))

    __radd__ = __add__

    def __sub__(self, other):
        return F3(self.value - F3._v(other))

    def __neg__(self):
        return F3(-self.value)

    def __mul__(self, other):
        return F3(self.value * F3._v(other))

    __rmul__ = __mul__

    def inverse(self) -> "F3":
        if not self.value:
            raise ZeroDivisionError("0 has no inverse in F_3")
        return F3(self.value)  # 1*1 = 2*2 = 1

    @staticmethod
    def _v(x) -> int:
        return x.value if isinstance(x, F3) else int(x)

    def __eq__(self, other):
        if isinstance(other, (F3, int)):
            return self.value == F3._v(other) % 3
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"F3({self.value})"


def reduce_mod_theta(x) -> F3:
    """Residue map Z[w] -> Z[w]/(theta) = F_3; since w = 1 mod theta this is (a + b) mod 3."""
    x = EisensteinInt.coerce(x)
    return F3(x.a + x.b)


class EisensteinScalar:
    """Element ``num / den`` of the fraction field K = Q(w), kept in lowest terms."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den: int = 1):
        num = EisensteinInt.coerce(num)
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num.a, num.b, den)
        if g > 1:
            num = EisensteinInt(num.a // g, num.b // g)
            den //= g
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "EisensteinScalar":
        if isinstance(x, EisensteinScalar):
            return x
        if isinstance(x, Fraction):
            return cls(EisensteinInt(x.numerator), x.denominator)
        return cls(EisensteinInt.coerce(x), 1)

    def __add__(self, other):
        try:
            o = EisensteinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinScalar(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = EisensteinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return EisensteinScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            o = EisensteinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "EisensteinScalar":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return EisensteinScalar(self.num.conj() * self.den, self.num.norm())

    def __truediv__(self, other):
        return self * EisensteinScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return EisensteinScalar.coerce(other) * self.inverse()

    def __eq__(self, other):
        try:
            o = EisensteinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.den == o.den and self.num == o.num

    def __hash__(self):
        if self.den == 1:
            return hash(self.num)
        return hash((self.num.a, self.num.b, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"EisensteinScalar({self.num.a}, {self.num.b}, den={self.den})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"

    def conj(self) -> "EisensteinScalar":
        return EisensteinScalar(self.num.conj(), self.den)

    def is_integral(self) -> bool:
        return self.den == 1

    def integral(self) -> EisensteinInt:
        if self.den != 1:
            raise ValueError(f"{self} is not integral")
        return self.num

    def norm(self) -> Fraction:
        return Fraction(self.num.norm(), self.den * self.den)

    def real_part(self) -> Fraction:
        return Fraction(2 * self.num.a - self.num.b, 2 * self.den)

    def is_real(self) -> bool:
        return self.num.b == 0

    def to_complex(self) -> complex:
        return self.num.to_complex() / self.den

    def mod_integers(self) -> "EisensteinScalar":
        """Canonical representative of the class in K / Z[w]."""
        d = self.den
        return EisensteinScalar(EisensteinInt(self.num.a % d, self.num.b % d), d)


def to_scalar(x) -> EisensteinScalar:
    return EisensteinScalar.coerce(x)


def omega_complex() -> complex:
    return cmath.exp(2j * math.pi / 3)


def parse_eisenstein(obj) -> EisensteinInt:
    """Read ``[a, b]`` or a plain integer as an Eisenstein integer."""
    if isinstance(obj, bool):
        raise TypeError("boolean is not an Eisenstein integer")
    if isinstance(obj, int):
        return EisensteinInt(obj, 0)
    if isinstance(obj, (list, tuple)) and len(obj) == 2 and all(
        isinstance(v, int) and not isinstance(v, bool) for v in obj
    ):
        return EisensteinInt(obj[0], obj[1])
    raise ValueError(f"expected [a, b] pair of integers, got {obj!r}")
