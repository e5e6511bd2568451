"""Modular side: fundamental-domain reduction, E4/E6, the j-invariant, and the
Hesse pencil ``x^3 + y^3 + z^3 + 6*lam*xyz``.

Everything here is double-precision floating point.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from functools import lru_cache

RHO = complex(-0.5, math.sqrt(3) / 2)  # w as a point of the upper half-plane
MAX_REDUCTION_STEPS = 10_000
SERIES_EPS = 1e-15


class StabilizerClass(enum.Enum):
    ORDER_648 = 648
    ORDER_108 = 108
    ORDER_54 = 54

    @property
    def order(self) -> int:
        return self.value

    def __str__(self):
        return self.name


def _check_tau(tau) -> complex:
    tau = complex(tau)
    if not tau.imag > 0:
        raise ValueError("tau must lie in the upper half-plane (Im tau > 0)")
    return tau


def mobius(m, tau: complex) -> complex:
    a, b, c, d = m
    return (a * tau + b) / (c * tau + d)


def _mat_mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


T_MAT = (1, 1, 0, 1)
T_INV_MAT = (1, -1, 0, 1)
S_MAT = (0, -1, 1, 0)
_WORD_MATS = {"T": T_MAT, "T^-1": T_INV_MAT, "S": S_MAT}


def word_matrix(word) -> tuple[int, int, int, int]:
    """Matrix of a word applied left to right (the first letter acts first)."""
    m = (1, 0, 0, 1)
    for letter in word:
        m = _mat_mul(_WORD_MATS[letter], m)
    return m


@dataclass(frozen=True)
class ReductionResult:
    reduced: complex
    word: tuple[str, ...]
    matrix: tuple[int, int, int, int]  # reduced == mobius(matrix, tau)


def reduce_fundamental(tau) -> ReductionResult:
    """Standard T/S reduction into ``|Re| <= 1/2``, ``|tau| >= 1``."""
    tau = _check_tau(tau)
    z = tau
    word: list[str] = []
    m = (1, 0, 0, 1)
    for _ in range(MAX_REDUCTION_STEPS):
        n = math.floor(z.real + 0.5)
        if n:
            letter, step = ("T^-1", T_INV_MAT) if n > 0 else ("T", T_MAT)
            for _ in range(abs(n)):
                word.append(letter)
                m = _mat_mul(step, m)
            z = complex(z.real - n, z.imag)
        if abs(z) < 1 - 1e-15:
            z = -1 / z
            word.append("S")
            m = _mat_mul(S_MAT, m)
            continue
        return ReductionResult(z, tuple(word), m)
    raise RuntimeError("fundamental-domain reduction did not converge")


# -- Eisenstein series and j ------------------------------------------------------


@lru_cache(maxsize=None)
def _sigma(k: int, n: int) -> int:
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def _q_series(q: complex, k: int, coeff: int) -> complex:
    total = complex(1)
    qn = complex(1)
    n = 0
    while True:
        n += 1
        qn *= q
        term = coeff * _sigma(k, n) * qn
        total += term
        if abs(term) < SERIES_EPS or n > 500:
            return total


def _e4_e6_raw(tau: complex) -> tuple[complex, complex]:
    q = cmath.exp(2j * math.pi * tau)
    return _q_series(q, 3, 240), _q_series(q, 5, -504)


def eisenstein_series(tau) -> tuple[complex, complex]:
    """``(E4(tau), E6(tau))``, evaluated at the reduced point and transported back."""
    tau = _check_tau(tau)
    red = reduce_fundamental(tau)
    e4, e6 = _e4_e6_raw(red.reduced)
    _, _, c, d = red.matrix
    f = c * tau + d  # E_k(M tau) = (c tau + d)^k E_k(tau)
    return e4 / f ** 4, e6 / f ** 6


def _delta_raw(tau: complex) -> complex:
    """``q * prod (1 - q^n)^24``; avoids the cancellation in ``E4^3 - E6^2``."""
    q = cmath.exp(2j * math.pi * tau)
    prod = complex(1)
    qn = complex(1)
    for _ in range(500):
        qn *= q
        prod *= (1 - qn) ** 24
        if abs(qn) < SERIES_EPS:
            break
    return q * prod


def j_invariant(tau) -> complex:
    tau = _check_tau(tau)
    red = reduce_fundamental(tau).reduced
    e4, _ = _e4_e6_raw(red)
    return e4 ** 3 / _delta_raw(red)


# -- Hesse pencil -------------------------------------------------------------------


def hesse_A(lam) -> complex:
    lam = complex(lam)
    return 12 * lam * (1 - lam ** 3)


def hesse_B(lam) -> complex:
    lam = complex(lam)
    return 2 * (1 - 20 * lam ** 3 - 8 * lam ** 6)


def is_smooth_hesse(lam, tol: float = 1e-12) -> bool:
    """The cubic ``x^3 + y^3 + z^3 + 6 lam xyz`` is smooth iff ``8 lam^3 + 1 != 0``."""
    return abs(8 * complex(lam) ** 3 + 1) > tol


def hesse_j(lam) -> complex:
    """``1728 * 4A^3 / (4A^3 + 27B^2)``."""
    a, b = hesse_A(lam), hesse_B(lam)
    num = 4 * a ** 3
    den = num + 27 * b ** 2
    if abs(den) <= 1e-12 * max(1.0, abs(num), abs(27 * b ** 2)):
        raise ValueError("singular Hesse cubic")
    return 1728 * num / den


LAMBDA_STAR = (math.sqrt(3) - 1) / 2  # real root of 1 - 20 lam^3 - 8 lam^6


def classify_lambda(lam, tol: float = 1e-9, band: float = 1e-6) -> StabilizerClass:
    lam = complex(lam)
    if not is_smooth_hesse(lam):
        raise ValueError("singular Hesse cubic")
    p648 = abs(lam ** 4 - lam)
    p108 = abs(1 - 20 * lam ** 3 - 8 * lam ** 6)
    hit648, hit108 = p648 < tol, p108 < tol
    if (hit648 and p108 < band) or (hit108 and p648 < band):
        raise ValueError("ambiguous, refine")
    if hit648:
        return StabilizerClass.ORDER_648
    if hit108:
        return StabilizerClass.ORDER_108
    if p648 < band or p108 < band:
        raise ValueError("ambiguous, refine")
    return StabilizerClass.ORDER_54


J0_TOL, J0_BAND = 1e-6, 1e-3
J1728_TOL, J1728_BAND = 1e-4, 1e-2


def classify_j(j: complex) -> StabilizerClass:
    if abs(j) < J0_TOL:
        return StabilizerClass.ORDER_648
    if abs(j - 1728) < J1728_TOL:
        return StabilizerClass.ORDER_108
    if abs(j) < J0_BAND or abs(j - 1728) < J1728_BAND:
        raise ValueError("ambiguous, refine")
    return StabilizerClass.ORDER_54


def classify_tau_elliptic(tau) -> StabilizerClass:
    """Class of the curve attached to ``tau``, read off from ``j(tau)``."""
    return classify_j(j_invariant(tau))


# -- sample points -------------------------------------------------------------------


def fundamental_grid(n: int = 40) -> list[complex]:
    """Deterministic grid in the fundamental domain, five columns by ``n // 5`` heights.

    The lowest row lies on the unit arc, so ``w``, ``i`` and ``w + 1`` are included.
    """
    if n < 5 or n % 5:
        raise ValueError("grid size must be a positive multiple of 5")
    offsets = [0.0, 0.05, 0.2, 0.5, 1.0, 1.5, 2.5, 4.0]
    rows = n // 5
    while len(offsets) < rows:
        offsets.append(offsets[-1] + 1.5)
    pts = []
    for re in (-0.5, -0.25, 0.0, 0.25, 0.5):
        base = math.sqrt(1 - re * re)
        for off in offsets[:rows]:
            pts.append(complex(re, base + off))
    return pts


def random_translate(tau: complex, rng, length: int = 4) -> tuple[complex, tuple]:
    """Apply a random short word in ``T, T^-1, S`` and return the image and the word."""
    word = tuple(rng.choice(("T", "T^-1", "S")) for _ in range(length))
    return mobius(word_matrix(word), tau), word
