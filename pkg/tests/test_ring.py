import cmath
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import eis, nonzero_eis
from eisenlattice.ring import (
    OMEGA,
    ONE,
    THETA,
    UNITS,
    ZERO,
    EisensteinInt,
    EisensteinScalar,
    F3,
    canonical_associate,
    conj,
    euclid_div,
    gcd,
    ideal_basis,
    parse_eisenstein,
    reduce_mod,
    reduce_mod_theta,
    residues,
    xgcd,
)

W = cmath.exp(2j * cmath.pi / 3)


# -- documented examples ---------------------------------------------------------


def test_conj_examples():
    assert conj(OMEGA) == EisensteinInt(-1, -1)
    assert conj(EisensteinInt(5)) == EisensteinInt(5)
    assert conj(THETA) == EisensteinInt(-1, -2)


def test_euclid_div_examples():
    assert euclid_div(THETA, THETA) == (ONE, ZERO)
    assert euclid_div(0, 5) == (ZERO, ZERO)
    q, r = euclid_div(2, THETA)
    assert q * THETA + r == EisensteinInt(2) and r.norm() < 3
    # oracle: some quotient in the 3x3 rounding neighbourhood also works
    assert any((EisensteinInt(2) - EisensteinInt(a, b) * THETA).norm() < 3
               for a in range(-2, 3) for b in range(-2, 3))


def test_euclid_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        euclid_div(1, 0)


def test_gcd_examples():
    g = gcd(THETA, 3)
    assert g == canonical_associate(THETA) == EisensteinInt(2, 1)
    assert gcd(1, EisensteinInt(7, -3)) == ONE
    assert gcd(2, 5) == ONE
    with pytest.raises(ValueError):
        gcd(0, 0)


def test_canonical_associate_examples():
    assert canonical_associate(-1) == ONE
    assert canonical_associate(THETA) == EisensteinInt(2, 1)
    assert canonical_associate(OMEGA) == ONE
    with pytest.raises(ValueError):
        canonical_associate(0)


def test_reduce_mod_theta_examples():
    assert reduce_mod_theta(THETA) == F3(0)
    assert reduce_mod_theta(OMEGA) == F3(1)
    assert reduce_mod_theta(5) == F3(2)
    assert (OMEGA - 1).exact_div(THETA) * THETA == OMEGA - 1


def test_units_form_cyclic_group_of_order_six():
    by_norm = [EisensteinInt(a, b) for a in range(-2, 3) for b in range(-2, 3)
               if EisensteinInt(a, b).norm() == 1]
    assert len(by_norm) == 6 and set(by_norm) == set(UNITS)
    gen = EisensteinInt(1, 1)
    assert [gen ** k for k in range(6)] == list(UNITS)
    assert gen ** 6 == ONE


def test_theta_squared_is_minus_three():
    assert THETA * THETA == EisensteinInt(-3)


def test_residues_mod_theta_are_0_1_2():
    assert list(residues(THETA)) == [EisensteinInt(0), EisensteinInt(1), EisensteinInt(2)]
    assert ideal_basis(THETA) == (3, 2, 1)


def test_parse_eisenstein():
    assert parse_eisenstein([3, -4]) == EisensteinInt(3, -4)
    assert parse_eisenstein(7) == EisensteinInt(7)
    for bad in ([1], [1, 2, 3], "1+w", [1.5, 2], True):
        with pytest.raises((ValueError, TypeError)):
            parse_eisenstein(bad)


def test_rendering():
    assert str(EisensteinInt(3, -4)) == "3-4*w"
    assert str(EisensteinInt(0, 1)) == "0+1*w"


def test_scalar_canonical_form():
    s = EisensteinScalar(EisensteinInt(2, 4), 6)
    assert (s.num, s.den) == (EisensteinInt(1, 2), 3)
    assert EisensteinScalar(THETA, 3) == EisensteinScalar(EisensteinInt(2, 4), 6)
    assert EisensteinScalar(THETA, -3) == EisensteinScalar(-THETA, 3)
    assert EisensteinScalar(THETA) * EisensteinScalar(-THETA, 3) == EisensteinScalar(1)
    assert EisensteinScalar(EisensteinInt(4, 1), 3).mod_integers() == EisensteinScalar(EisensteinInt(1, 1), 3)


# -- properties ------------------------------------------------------------------


@settings(max_examples=2000)
@given(eis(), eis(), eis())
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + (-x) == ZERO


@given(eis(), eis())
def test_multiplication_matches_complex_embedding(x, y):
    assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-9
    assert abs(x.to_complex() - (x.a + x.b * W)) < 1e-12


@given(eis(), eis())
def test_norm_multiplicative_and_definite(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert x.norm() >= 0 and (x.norm() == 0) == (not x)
    assert x.norm() == x.a * x.a - x.a * x.b + x.b * x.b


@given(eis(), eis())
def test_conj_is_involutive_homomorphism(x, y):
    assert x.conj().conj() == x
    assert (x * y).conj() == x.conj() * y.conj()
    assert x * x.conj() == EisensteinInt(x.norm())


@settings(max_examples=1000)
@given(eis(100), nonzero_eis(30))
def test_euclid_contract(x, y):
    q, r = euclid_div(x, y)
    assert q * y + r == x
    assert r.norm() < y.norm()


@given(eis(), eis())
def test_xgcd_bezout_and_divisibility(x, y):
    if not x and not y:
        return
    g, s, t = xgcd(x, y)
    assert s * x + t * y == g
    assert g.divides(x) and g.divides(y)
    assert canonical_associate(g) == g


@given(eis(), eis())
def test_reduce_mod_theta_is_ring_homomorphism(x, y):
    assert reduce_mod_theta(x + y) == reduce_mod_theta(x) + reduce_mod_theta(y)
    assert reduce_mod_theta(x * y) == reduce_mod_theta(x) * reduce_mod_theta(y)
    assert (reduce_mod_theta(x) == F3(0)) == THETA.divides(x)


def test_reduce_mod_theta_surjective():
    assert {int(reduce_mod_theta(EisensteinInt(a, b))) for a in range(3) for b in range(3)} == {0, 1, 2}


@given(nonzero_eis(), st.sampled_from(UNITS))
def test_canonical_associate_idempotent_and_unit_invariant(x, u):
    c = canonical_associate(x)
    assert canonical_associate(c) == c
    assert canonical_associate(u * x) == c
    assert c.a > c.b >= 0


@given(eis(40), nonzero_eis(6))
def test_reduce_mod_is_canonical_residue(x, m):
    r = reduce_mod(x, m)
    assert m.divides(x - r)
    assert r in set(residues(m))
    assert reduce_mod(r, m) == r


@given(nonzero_eis(5))
def test_residue_count_is_norm(m):
    res = list(residues(m))
    assert len(res) == m.norm()
    # pairwise incongruent
    for a, b in itertools.combinations(res, 2):
        assert not m.divides(a - b)


@given(eis(), st.integers(1, 12), eis(), st.integers(1, 12))
def test_scalar_field_arithmetic(a, d, b, e):
    x, y = EisensteinScalar(a, d), EisensteinScalar(b, e)
    assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-9
    assert abs((x + y).to_complex() - (x.to_complex() + y.to_complex())) < 1e-9
    if x:
        assert x * x.inverse() == EisensteinScalar(1)
    assert x.norm() == Fraction(a.norm(), d * d)
    assert (x - x.mod_integers()).is_integral()
