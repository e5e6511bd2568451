import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import eis
from eisenlattice.constructions import A1, A2, H_GRAM, d3, lambda_lattice
from eisenlattice.groups import (
    aut_H_membership,
    discriminant_action,
    from_ambient_matrix,
    full_aut_definite,
    is_isometry,
    isometry_group,
    map_norm_minus3,
    norm_from_params,
    reflection,
    reflections_of,
    to_ambient_matrix,
    triflection,
    vector_orbits,
    weyl_group,
)
from eisenlattice.lattice import short_vectors
from eisenlattice.linalg import Matrix, hermitian_pair, k_inverse, vec
from eisenlattice.matgroup import GroupTooLarge, MatrixGroup, orbits
from eisenlattice.ring import OMEGA, OMEGA2, UNITS, EisensteinInt

D3 = d3()
ROOTS = short_vectors(D3, 2).vectors
G = D3.gram
I3 = Matrix.identity(3)


def _lat_coords(x):
    return k_inverse(D3.basis).vmul(x)


# -- reflections ---------------------------------------------------------------------


@given(st.sampled_from(ROOTS), st.lists(eis(4), min_size=3, max_size=3))
def test_reflection_properties(v, w):
    s = reflection(v, G)
    assert is_isometry(s, G)
    assert s @ s == I3
    assert s.vmul(v) == tuple(-x for x in v)
    w = tuple(w)
    # w - (w, v) v
    c = hermitian_pair(w, v, G)
    assert s.vmul(w) == tuple(a - c * b for a, b in zip(w, v))


def test_reflection_rejects_wrong_norm():
    with pytest.raises(ValueError, match="norm 2"):
        reflection(vec(0, 0, 1), G)  # norm 3


def test_unit_multiples_give_same_reflection():
    v = ROOTS[0]
    assert len({reflection(tuple(u * x for x in v), G) for u in UNITS}) == 1
    assert len(reflections_of(ROOTS, G)) == 9


# -- triflections -------------------------------------------------------------------------


@pytest.mark.parametrize("a_amb", [A1, A2])
def test_triflection_properties(a_amb):
    a = _lat_coords(a_amb)
    t = triflection(a, G)
    assert t.is_integral()
    assert is_isometry(t, G)
    assert t @ t @ t == I3 and t != I3
    assert t.vmul(a) == tuple(OMEGA * x for x in a)


def test_triflection_errors():
    with pytest.raises(ValueError, match="norm 3"):
        triflection(vec(1, 0, 0), I3)
    # norm 3 but pairings with the standard basis are units
    with pytest.raises(ValueError, match="theta"):
        triflection(vec(1, 1, 1), I3)


def test_triflection_in_ambient_coordinates_is_diag():
    t = triflection(_lat_coords(A1), G)
    assert to_ambient_matrix(D3, t) == Matrix.diag([1, 1, OMEGA])
    assert from_ambient_matrix(D3, Matrix.diag([1, 1, OMEGA])) == t


def test_from_ambient_rejects_non_preserving_map():
    with pytest.raises(ValueError):
        from_ambient_matrix(D3, Matrix.diag([1, 1, -1]))


# -- groups of D3 -----------------------------------------------------------------------------


def test_weyl_group_of_d3():
    w = weyl_group(D3)
    assert w.order() == 54
    orbs = vector_orbits(w, ROOTS)
    assert [len(o) for o in orbs] == [54]
    assert all(is_isometry(g, G) for g in w.elements)


def test_aut_d3_monomial_part():
    # oracle: monomial unit matrices preserving x1 + x2 + x3 = 0 mod theta are those
    # whose unit entries all lie in the same class mod theta: 3! * 2 * 3^3 of them
    expected = 0
    for perm in itertools.permutations(range(3)):
        for us in itertools.product(UNITS, repeat=3):
            m = Matrix([[us[i] if perm[i] == j else 0 for j in range(3)] for i in range(3)])
            try:
                from_ambient_matrix(D3, m)
            except ValueError:
                continue
            expected += 1
    assert expected == 324
    aut = full_aut_definite(D3)
    assert aut.order() == 1296
    mono = 0
    for g in aut.elements:
        a = to_ambient_matrix(D3, g)
        if all(sum(1 for x in r if x) == 1 for r in a.entries):
            mono += 1
    assert mono == expected


def test_discriminant_action_of_aut_d3():
    aut = full_aut_definite(D3)
    hom = discriminant_action(aut, D3)
    assert hom.is_homomorphism()
    assert hom.image().order() == 24
    kernel = set(hom.kernel())
    assert kernel == set(weyl_group(D3).elements)


def test_isometry_group_rejects_non_isometry():
    with pytest.raises(ValueError, match="not an isometry"):
        isometry_group([Matrix.diag([2, 1, 1])], G)


def test_aut_requires_definite():
    with pytest.raises(ValueError, match="definite"):
        full_aut_definite(lambda_lattice())


# -- matrix groups ------------------------------------------------------------------------------


def test_group_cap():
    t = Matrix([[1, 1], [0, 1]])  # infinite order
    with pytest.raises(GroupTooLarge):
        MatrixGroup([t], Matrix.identity(2), cap=50).order()


def test_cyclic_group_and_statistics():
    g = MatrixGroup([Matrix.diag([OMEGA, -1])], Matrix.identity(2))
    assert g.order() == 6
    assert g.order_statistics() == {1: 1, 2: 1, 3: 2, 6: 2}
    assert g.is_abelian()
    assert len(g.center()) == 6


def test_orbits_partition():
    pts = list(range(10))
    orbs = orbits([lambda x: (x + 3) % 10], pts, lambda p, f: f(p))
    assert len(orbs) == 1
    orbs = orbits([lambda x: (x + 5) % 10], pts, lambda p, f: f(p))
    assert sorted(len(o) for o in orbs) == [2] * 5


# -- the lattice H ----------------------------------------------------------------------------------


@st.composite
def sl2z(draw, length=8):
    m = [[1, 0], [0, 1]]
    for _ in range(draw(st.integers(0, length))):
        s = draw(st.sampled_from([[[1, 1], [0, 1]], [[1, -1], [0, 1]], [[0, -1], [1, 0]]]))
        m = [[sum(m[i][k] * s[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    return m


@given(sl2z(), st.integers(0, 2))
def test_mu3_times_sl2z_are_members(m, k):
    u = OMEGA ** k
    mat = Matrix([[u * x for x in row] for row in m])
    assert aut_H_membership(mat)
    assert is_isometry(mat, H_GRAM)


def test_membership_law_matches_isometry_equation_on_box():
    box = [EisensteinInt(a, b) for a in range(-1, 2) for b in range(-1, 2)]
    members = 0
    for ents in itertools.product(box, repeat=4):
        m = Matrix([ents[:2], ents[2:]])
        assert aut_H_membership(m) == is_isometry(m, H_GRAM)
        members += aut_H_membership(m)
    assert members > 0


def test_membership_rejects_malformed():
    assert not aut_H_membership(Matrix.identity(3))


@given(*[st.integers(-6, 6)] * 4)
def test_norm_formula(a, b, c, d):
    w = (EisensteinInt(a, b), EisensteinInt(c, d))
    assert hermitian_pair(w, w, H_GRAM) == EisensteinInt(norm_from_params(a, b, c, d))


@st.composite
def norm_minus3_vectors(draw):
    m = draw(sl2z())
    # (a, c), (b, d) from a determinant -1 integer matrix
    p = [[m[0][0], m[0][1]], [-m[1][0], -m[1][1]]]
    return (EisensteinInt(p[0][0], p[1][0]), EisensteinInt(p[0][1], p[1][1]))


@given(norm_minus3_vectors(), norm_minus3_vectors())
def test_map_norm_minus3_transitivity(w1, w2):
    assert hermitian_pair(w1, w1, H_GRAM) == EisensteinInt(-3)
    g = map_norm_minus3(w1, w2)
    assert g.vmul(w1) == w2
    assert all(x.b == 0 for r in g.entries for x in r)
    assert g[0, 0].a * g[1, 1].a - g[0, 1].a * g[1, 0].a == 1
    assert is_isometry(g, H_GRAM)


def test_map_norm_minus3_rejects_wrong_norm():
    with pytest.raises(ValueError):
        map_norm_minus3((EisensteinInt(1), EisensteinInt(0)), (EisensteinInt(1), OMEGA2))
