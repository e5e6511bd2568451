import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import eis
from eisenlattice.constructions import (
    A_MATRIX,
    BUILTIN_LATTICES,
    C_MATRIX,
    D3_ROOTS,
    H_GRAM,
    Q_GIVEN,
    SIGMA_A2_GIVEN,
    A1,
    A2,
    V_VECTORS,
    W_VECTORS,
    bordered_gram,
    build_glue,
    case_gram,
    d3,
    d3_a,
    disc_images_in_alpha_beta,
    j0,
    lambda_form,
    norm_minus3_witness,
    q_derived,
    stabilizer_class_lattice,
    triflection_in,
    reflection_in,
    verify_explicit_embedding,
)
from eisenlattice.groups import from_ambient_matrix, to_ambient_matrix
from eisenlattice.lattice import (
    Signature,
    gram_signature,
    is_primitive,
    min_nonzero_norm,
    orthogonal_complement,
    same_span,
    signature,
)
from eisenlattice.linalg import Matrix, det, hermitian_pair, is_unimodular
from eisenlattice.modular import RHO, StabilizerClass
from eisenlattice.ring import OMEGA, THETA, EisensteinInt

W_SYM = sympy.Rational(-1, 2) + sympy.sqrt(3) * sympy.I / 2


def _sym(x: EisensteinInt):
    return x.a + x.b * W_SYM


# -- named lattices -------------------------------------------------------------------


def test_builtins_construct():
    for name, make in BUILTIN_LATTICES.items():
        lat = make()
        assert lat.rank in (2, 3, 5), name


def test_l0_m0_orthogonal_and_sizes():
    for w in W_VECTORS:
        for v in V_VECTORS:
            assert hermitian_pair(w, v, BUILTIN_LATTICES["lambda"]().gram) == EisensteinInt(0)


def test_explicit_embedding():
    rep = verify_explicit_embedding()
    assert rep.witness is not None
    assert rep.witness @ d3().gram @ rep.witness.H == rep.gram_l0
    assert rep.primitive and rep.complement_matches_m0 and rep.pairings_vanish
    assert rep.m0_gram == H_GRAM


def test_glue():
    g = build_glue()
    assert g.index == 9
    assert g.determinant.norm() == 1
    assert g.signature == Signature(4, 1)
    assert g.disc_is_v_plus_v_twisted
    assert is_unimodular(g.glued.gram)
    # the two pieces sit primitively and are each other's orthogonal complement
    assert is_primitive(g.d3_image) and is_primitive(g.h_image)
    comp = orthogonal_complement(g.d3_image, g.glued)
    assert same_span(comp.basis, g.h_image.basis)
    assert g.d3_image.gram == d3().gram and g.h_image.gram == H_GRAM


@pytest.mark.parametrize("a, expected", [(THETA, 3), (3, 9), (1, 1)])
def test_d3_a_disc(a, expected):
    assert d3_a(a).disc() == EisensteinInt(expected)


def test_case_gram():
    m = case_gram(OMEGA)
    assert m.is_hermitian()
    assert m[2, 0] == OMEGA and m[0, 2] == OMEGA.conj()


# -- the form Q ---------------------------------------------------------------------------


def test_q_derived_value():
    assert q_derived() == Matrix([[3, 3, THETA], [3, 6, 2 * THETA], [-THETA, -2 * THETA, 3]])


def test_q_given_differs_from_derived_in_one_entry():
    diff = [(i, j) for i in range(3) for j in range(3) if Q_GIVEN[i, j] != q_derived()[i, j]]
    assert diff == [(0, 0)]


def test_both_forms_positive_definite_with_minimum_3():
    for q in (Q_GIVEN, q_derived()):
        assert gram_signature(q) == Signature(3, 0)
        assert min_nonzero_norm(q) == 3


@given(st.lists(eis(3), min_size=3, max_size=3))
def test_determinant_identity_for_derived_form(a):
    assert det(bordered_gram(a)) == EisensteinInt(3) - hermitian_pair(a, a, q_derived())


@given(st.lists(eis(2), min_size=3, max_size=3))
def test_bordered_determinant_matches_sympy(a):
    m = bordered_gram(a)
    sm = sympy.Matrix(4, 4, lambda i, j: _sym(m[i, j]))
    d = det(m)
    assert sympy.simplify(sm.det() - _sym(d)) == 0


def test_given_q_counterexample():
    a = [EisensteinInt(0, 2), EisensteinInt(2, -2), EisensteinInt(0, 1)]
    assert det(bordered_gram(a)) == EisensteinInt(-60)
    assert EisensteinInt(3) - hermitian_pair(a, a, Q_GIVEN) == EisensteinInt(-72)
    assert EisensteinInt(3) - hermitian_pair(a, a, q_derived()) == EisensteinInt(-60)


# -- triflections and the discriminant images ---------------------------------------------------


def test_sigma_a2_formula_matches_given_matrix():
    lat = d3()
    s2 = triflection_in(lat, A2)
    assert to_ambient_matrix(lat, s2) == SIGMA_A2_GIVEN
    assert not SIGMA_A2_GIVEN.is_integral()  # does not preserve Z[w]^3


def test_sigma_a1_is_diag():
    lat = d3()
    assert to_ambient_matrix(lat, triflection_in(lat, A1)) == A_MATRIX


def test_reflection_in_roots():
    lat = d3()
    for r in D3_ROOTS:
        s = reflection_in(lat, r)
        assert s @ s == Matrix.identity(3)


def _column(m):
    return [list(r) for r in zip(*[[v % 3 for v in row] for row in m])]


def test_discriminant_images():
    lat = d3()
    s1 = triflection_in(lat, A1)
    s2 = triflection_in(lat, A2)
    c = from_ambient_matrix(lat, C_MATRIX)
    a = from_ambient_matrix(lat, A_MATRIX)
    assert _column(disc_images_in_alpha_beta(lat, a)) == [[1, 0], [1, 1]]
    assert _column(disc_images_in_alpha_beta(lat, s1)) == [[1, 0], [1, 1]]
    assert _column(disc_images_in_alpha_beta(lat, s1 @ s1 @ s2)) == [[0, 2], [1, 0]]
    # -1 acts as -1 on the discriminant group
    assert _column(disc_images_in_alpha_beta(lat, c)) == [[2, 0], [0, 2]]


# -- the period point -------------------------------------------------------------------------------


@given(st.floats(-3, 3), st.floats(0.05, 5))
def test_j0_norm_law(x, y):
    p = j0(complex(x, y))
    assert math.isclose(p.norm, -2 * math.sqrt(3) * y, rel_tol=1e-9, abs_tol=1e-9)
    for w in W_VECTORS:
        assert abs(lambda_form(p.coordinates, tuple(c.to_complex() for c in w))) < 1e-9


def test_j0_at_rho():
    p = j0(RHO)
    assert abs(p.norm + 3) < 1e-12
    w = norm_minus3_witness(RHO)
    assert w is not None
    assert hermitian_pair(w, w, BUILTIN_LATTICES["lambda"]().gram) == EisensteinInt(-3)


def test_j0_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        j0(complex(0, -1))


@pytest.mark.parametrize("tau, cls", [
    (RHO, StabilizerClass.ORDER_648),
    (RHO + 1, StabilizerClass.ORDER_648),
    (1j, StabilizerClass.ORDER_108),
    (complex(3, 1), StabilizerClass.ORDER_108),
    (complex(0.1, 2.0), StabilizerClass.ORDER_54),
])
def test_stabilizer_class_lattice(tau, cls):
    assert stabilizer_class_lattice(tau) == cls


def test_stabilizer_near_boundary():
    with pytest.raises(ValueError, match="near-boundary"):
        stabilizer_class_lattice(1j + 1e-7)
