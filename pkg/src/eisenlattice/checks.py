"""Registry of verification checks C1..C15.

Each check recomputes a finite claim from scratch and returns a
:class:`CheckReport` whose ``detail`` is JSON-serializable.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import constructions as cons
from .finite_space import (
    TorsionMap,
    act_on_subspace,
    aut_group,
    block_map,
    direct_sum as space_sum,
    find_isomorphism,
    is_graph_type,
    is_isotropic,
    isotropic_subspaces,
    make_V,
    subspace,
    transitivity_check,
)
from .groups import (
    aut_H_membership,
    discriminant_action,
    from_ambient_matrix,
    full_aut_definite,
    is_isometry,
    isometry_group,
    map_norm_minus3,
    norm_from_params,
    to_ambient_matrix,
    vector_orbits,
    weyl_group,
)
from .lattice import (
    HermitianLattice,
    discriminant,
    gram_signature,
    min_nonzero_norm,
    short_vectors,
)
from .linalg import Matrix, det, hermitian_pair, is_unimodular, snf
from .matgroup import DEFAULT_CAP, MatrixGroup
from .modular import (
    LAMBDA_STAR,
    RHO,
    StabilizerClass,
    classify_lambda,
    classify_tau_elliptic,
    fundamental_grid,
    hesse_j,
    is_smooth_hesse,
    j_invariant,
    random_translate,
)
from .ring import (
    ONE,
    OMEGA,
    THETA,
    UNITS,
    ZERO,
    EisensteinInt,
    canonical_associate,
    euclid_div,
    reduce_mod_theta,
)

SEED = 20240917


@dataclass
class CheckConfig:
    grid: int = 40
    cap: int = DEFAULT_CAP
    seed: int = SEED


@dataclass
class CheckReport:
    check: str
    status: str
    detail: dict = field(default_factory=dict)
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"check": self.check, "status": self.status, "detail": self.detail,
                "ms": round(self.ms, 3)}

    def summary_line(self) -> str:
        bits = ", ".join(f"{k}={_short(v)}" for k, v in self.detail.items() if not isinstance(v, (dict, list)))
        return f"{self.check}: {self.status.upper()} ({self.ms:.0f} ms) {bits}"


def _short(v):
    s = str(v)
    return s if len(s) <= 40 else s[:37] + "..."


def _pair(x: EisensteinInt) -> list[int]:
    return [x.a, x.b]


def _f3(m: list[list[int]]) -> list[list[int]]:
    return [[v % 3 for v in row] for row in m]


def _transpose(m):
    return [list(r) for r in zip(*m)]


def _rand_e(rng: random.Random, bound: int) -> EisensteinInt:
    return EisensteinInt(rng.randint(-bound, bound), rng.randint(-bound, bound))


# -- C1: ring ----------------------------------------------------------------------------


def check_c1(cfg: CheckConfig) -> tuple[bool, dict]:
    rng = random.Random(cfg.seed)
    n = 10_000
    bad = []
    for _ in range(n):
        x, y, z = (_rand_e(rng, 50) for _ in range(3))
        if (x * y) * z != x * (y * z) or x * (y + z) != x * y + x * z or x * y != y * x:
            bad.append("axiom")
        if (x * y).norm() != x.norm() * y.norm():
            bad.append("norm")
        if y:
            q, r = euclid_div(x, y)
            if q * y + r != x or r.norm() >= y.norm():
                bad.append("euclid")
        if reduce_mod_theta(x * y) != reduce_mod_theta(x) * reduce_mod_theta(y):
            bad.append("residue")
        if (int(reduce_mod_theta(x)) == 0) != THETA.divides(x):
            bad.append("kernel")
    omega_ok = OMEGA * OMEGA + OMEGA + ONE == ZERO
    units = [EisensteinInt(a, b) for a in range(-1, 2) for b in range(-1, 2) if EisensteinInt(a, b).norm() == 1]
    gen = EisensteinInt(1, 1)
    cyclic = {gen ** k for k in range(6)} == set(units) and len(units) == 6
    samples = [x for x in (_rand_e(rng, 9) for _ in range(200)) if x]
    canon = all(canonical_associate(u * x) == canonical_associate(x) for x in samples for u in UNITS)
    ok = not bad and omega_ok and cyclic and canon
    return ok, {"cases": n, "failures": len(bad), "units": len(units), "units_cyclic": cyclic,
                "omega_relation": omega_ok, "canonical_associate_stable": canon}


# -- C2: Smith normal form ----------------------------------------------------------------


def _snf_ok(m: Matrix) -> bool:
    res = snf(m)
    if res.u @ m @ res.v != res.d:
        return False
    if det(res.u).norm() != 1 or det(res.v).norm() != 1:
        return False
    d = res.d
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j and d[i, j]:
                return False
    diag = res.diagonal()
    nz = [x for x in diag if x]
    if any(canonical_associate(x) != x for x in nz):
        return False
    if any(not diag[i] and diag[i + 1] for i in range(len(diag) - 1)):
        return False
    return all(nz[i].divides(nz[i + 1]) for i in range(len(nz) - 1))


def check_c2(cfg: CheckConfig) -> tuple[bool, dict]:
    rng = random.Random(cfg.seed + 2)
    n = 150
    fails = 0
    for _ in range(n):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = Matrix([[_rand_e(rng, 3) for _ in range(c)] for _ in range(r)])
        fails += not _snf_ok(m)
    d3_diag = snf(cons.d3().gram).diagonal()
    expected = [ONE, canonical_associate(THETA), canonical_associate(THETA)]
    ok = fails == 0 and d3_diag == expected
    return ok, {"random_matrices": n, "failures": fails,
                "d3_invariant_factors": [_pair(x) for x in d3_diag]}


# -- C3: D(D3) ----------------------------------------------------------------------------


def check_c3(cfg: CheckConfig) -> tuple[bool, dict]:
    lat = cons.d3()
    d = discriminant(lat)
    space = d.space
    theta_c = canonical_associate(THETA)
    iso = find_isomorphism(space, make_V())
    disc = lat.disc()
    ok = (
        space.order() == 9
        and list(space.invariant_factors) == [theta_c, theta_c]
        and iso is not None
        and disc == EisensteinInt(3)
        and space.order() == disc.norm()
        and space.order() == disc.a ** 2
    )
    return ok, {
        "order": space.order(),
        "invariant_factors": [_pair(x) for x in space.invariant_factors],
        "isomorphic_to_V": iso is not None,
        "isomorphism": [[_pair(v) for v in img] for img in iso] if iso else None,
        "disc": _pair(disc),
    }


# -- C4: roots and W(D3) ----------------------------------------------------------------------


def check_c4(cfg: CheckConfig) -> tuple[bool, dict]:
    lat = cons.d3()
    roots = short_vectors(lat, 2)
    w = weyl_group(lat, cap=cfg.cap)
    orbs = vector_orbits(w, roots)
    g0 = isometry_group([cons.reflection_in(lat, r) for r in cons.D3_ROOTS], lat.gram, cap=cfg.cap)
    ok = len(roots) == 54 and w.order() == 54 and len(orbs) == 1 and g0.same_elements(w)
    return ok, {"norm2_vectors": len(roots), "weyl_order": w.order(), "orbits": len(orbs),
                "three_reflections_generate": g0.same_elements(w)}


# -- C5: Aut(D3) ----------------------------------------------------------------------------------


def check_c5(cfg: CheckConfig) -> tuple[bool, dict]:
    lat = cons.d3()
    aut = full_aut_definite(lat, cap=cfg.cap)
    w = weyl_group(lat, cap=cfg.cap)
    hom = discriminant_action(aut, lat)
    kernel = hom.kernel()
    image = hom.image()
    ok = (
        aut.order() == 1296
        and set(kernel) == set(w.elements)
        and image.order() == 24
        and aut.order() == w.order() * image.order()
        and hom.is_homomorphism()
    )
    return ok, {"aut_order": aut.order(), "kernel_order": len(kernel),
                "kernel_equals_weyl": set(kernel) == set(w.elements), "image_order": image.order()}


# -- C6: Aut(V) -------------------------------------------------------------------------------------


def check_c6(cfg: CheckConfig) -> tuple[bool, dict]:
    g = aut_group(make_V())
    inv = g.involutions()
    center = g.center()
    ok = g.order() == 24 and not g.is_abelian() and len(inv) == 1 and len(center) == 2
    return ok, {"order": g.order(), "abelian": g.is_abelian(), "involutions": len(inv),
                "center": len(center), "element_orders": {str(k): v for k, v in g.order_statistics().items()}}


# -- C7: the lattice H ------------------------------------------------------------------------------


def _random_sl2z(rng: random.Random) -> list[list[int]]:
    m = [[1, 0], [0, 1]]
    for _ in range(rng.randint(0, 6)):
        k = rng.randint(-3, 3)
        step = rng.choice(([[1, k], [0, 1]], [[1, 0], [k, 1]], [[0, -1], [1, 0]]))
        m = [[sum(m[i][l] * step[l][j] for l in range(2)) for j in range(2)] for i in range(2)]
    return m


def check_c7(cfg: CheckConfig) -> tuple[bool, dict]:
    rng = random.Random(cfg.seed + 7)
    gram = cons.H_GRAM
    members_ok = 0
    for _ in range(1000):
        m = _random_sl2z(rng)
        u = OMEGA ** rng.randint(0, 2)
        g = Matrix(m).scale(u)
        if aut_H_membership(g) and is_isometry(g, gram):
            members_ok += 1
    rejected = 0
    perturbed = 0
    while perturbed < 1000:
        m = Matrix(_random_sl2z(rng)).scale(OMEGA ** rng.randint(0, 2))
        i, j = rng.randint(0, 1), rng.randint(0, 1)
        delta = _rand_e(rng, 2)
        if not delta:
            continue
        rows = [list(r) for r in m.entries]
        rows[i][j] = rows[i][j] + delta
        p = Matrix(rows)
        if is_isometry(p, gram):
            continue  # landed back in the group; not a non-member
        perturbed += 1
        rejected += not aut_H_membership(p)
    box = range(-3, 4)
    formula_ok = 0
    box_size = 0
    for a in box:
        for b in box:
            for c in box:
                for d in box:
                    box_size += 1
                    x = (EisensteinInt(a, b), EisensteinInt(c, d))
                    if hermitian_pair(x, x, gram) == EisensteinInt(norm_from_params(a, b, c, d)):
                        formula_ok += 1
    pool = []
    for a in range(-5, 6):
        for b in range(-5, 6):
            for c in range(-5, 6):
                for d in range(-5, 6):
                    if a * d - b * c == -1:
                        pool.append((EisensteinInt(a, b), EisensteinInt(c, d)))
    witnesses = 0
    for _ in range(50):
        w1, w2 = rng.choice(pool), rng.choice(pool)
        g = map_norm_minus3(w1, w2)
        if g.vmul(w1) == w2 and aut_H_membership(g) and is_isometry(g, gram):
            witnesses += 1
    ok = members_ok == 1000 and rejected == 1000 and formula_ok == box_size and witnesses == 50
    return ok, {"members_accepted": members_ok, "perturbed_rejected": rejected,
                "norm_formula_box": box_size, "norm_formula_ok": formula_ok,
                "transitivity_witnesses": witnesses}


# -- C8: gluing and the explicit embedding ---------------------------------------------------------------


def check_c8(cfg: CheckConfig) -> tuple[bool, dict]:
    from .lattice import is_primitive, orthogonal_complement, same_span

    glue = cons.build_glue()
    d3i, hi = glue.d3_image, glue.h_image
    mutual = (same_span(orthogonal_complement(d3i, glue.glued).basis, hi.basis)
              and same_span(orthogonal_complement(hi, glue.glued).basis, d3i.basis))
    emb = cons.verify_explicit_embedding()
    witness_ok = emb.witness is not None and emb.witness @ cons.d3().gram @ emb.witness.H == emb.gram_l0
    ok = (
        glue.index == 9
        and glue.determinant.norm() == 1
        and tuple(glue.signature) == (4, 1)
        and glue.disc_is_v_plus_v_twisted
        and is_primitive(d3i) and is_primitive(hi) and mutual
        and witness_ok
        and emb.primitive
        and emb.complement_matches_m0
        and emb.m0_gram == cons.H_GRAM
        and emb.pairings_vanish
    )
    return ok, {
        "glue_index": glue.index,
        "glue_det": _pair(glue.determinant),
        "glue_signature": list(glue.signature),
        "glue_parts_primitive_and_complementary": mutual,
        "l0_isometric_to_d3": witness_ok,
        "l0_primitive": emb.primitive,
        "complement_equals_m0": emb.complement_matches_m0,
        "m0_gram": emb.m0_gram.to_json(),
    }


# -- C9: isotropic planes in V + V(-1) ---------------------------------------------------------------------


def check_c9(cfg: CheckConfig) -> tuple[bool, dict]:
    v = make_V()
    vt = v.twist()
    w = space_sum(v, vt)
    planes = isotropic_subspaces(w, 2)
    graph = [s for s in planes if is_graph_type(s, 2)]
    aut_v = aut_group(v)
    aut_vt = aut_group(vt)
    ident_v, ident_vt = TorsionMap.identity(v), TorsionMap.identity(vt)
    blocks = ([block_map(w, [g, ident_vt]) for g in aut_v.generators]
              + [block_map(w, [ident_v, g]) for g in aut_vt.generators])
    blockwise = MatrixGroup(blocks, TorsionMap.identity(w), cap=cfg.cap)
    summary = transitivity_check(blockwise, graph)
    w0 = subspace([[1, 0, 1, 0], [0, 1, 0, 1]])
    translates = {act_on_subspace(w0, block_map(w, [ident_v, TorsionMap(vt, g.images)])) for g in aut_v.elements}
    full = aut_group(w)
    full_summary = transitivity_check(full, graph)
    ok = (
        len(graph) == 24
        and is_isotropic(w, w0)
        and summary.transitive
        and translates == set(graph)
    )
    return ok, {
        "isotropic_planes": len(planes),
        "graph_type_planes": len(graph),
        "blockwise_order": blockwise.order(),
        "blockwise_transitive": summary.transitive,
        "equals_translates_of_W0": translates == set(graph),
        "full_aut_order": full.order(),
        "full_aut_preserves_graph_type": full_summary.invariant,
    }


# -- C10: triflections and discriminant images --------------------------------------------------------------


def check_c10(cfg: CheckConfig) -> tuple[bool, dict]:
    lat = cons.d3()
    s1 = cons.triflection_in(lat, cons.A1)
    s2 = cons.triflection_in(lat, cons.A2)
    s1_amb, s2_amb = to_ambient_matrix(lat, s1), to_ambient_matrix(lat, s2)
    ident = Matrix.identity(3)
    order3 = all(m @ m @ m == ident and m != ident for m in (s1, s2))
    integral = s1.is_integral() and s2.is_integral()
    w = weyl_group(lat, cap=cfg.cap)
    sub = isometry_group(list(w.generators) + [s1, s2], lat.gram, cap=cfg.cap)
    image = discriminant_action(sub, lat).image()
    c_l = from_ambient_matrix(lat, cons.C_MATRIX)
    a_l = from_ambient_matrix(lat, cons.A_MATRIX)
    g_prime = isometry_group([c_l, a_l], lat.gram, cap=cfg.cap)
    hom = discriminant_action(g_prime, lat)
    injective = hom.image().order() == g_prime.order() == 6

    def col(m):
        return _transpose(_f3(cons.disc_images_in_alpha_beta(lat, m)))

    images = {"C": col(c_l), "A": col(a_l), "s1": col(s1), "s1^2*s2": col(s1 @ s1 @ s2)}
    given = {"C": [[1, 0], [0, 2]], "A": [[1, 0], [1, 1]], "s1": [[1, 0], [1, 1]],
             "s1^2*s2": [[0, 2], [1, 0]]}
    ok = (
        s1_amb == cons.A_MATRIX
        and order3
        and integral
        and sub.order() == 1296
        and image.order() == 24
        and injective
    )
    return ok, {
        "sigma_a1_is_diag_1_1_w": s1_amb == cons.A_MATRIX,
        "sigma_a2_matches_given": s2_amb == cons.SIGMA_A2_GIVEN,
        "order_3": order3,
        "integral": integral,
        "sigma_a2_extends_to_ambient": s2_amb.is_integral(),
        "generated_order": sub.order(),
        "image_order": image.order(),
        "C_A_injective": injective,
        "images_alpha_beta": images,
        "given_image_matches": {k: images[k] == given[k] for k in images},
    }


# -- C11: the form Q ---------------------------------------------------------------------------------------


def _det_identity(q: Matrix, rng: random.Random, samples: int) -> tuple[int, list]:
    good = 0
    first_bad = None
    for _ in range(samples):
        a = [EisensteinInt(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(3)]
        lhs = det(cons.bordered_gram(a))
        rhs = EisensteinInt(3) - hermitian_pair(a, a, q)
        if lhs == rhs:
            good += 1
        elif first_bad is None:
            first_bad = {"a": [_pair(x) for x in a], "det": _pair(lhs), "3-Q(a,a)": _pair(rhs)}
    return good, first_bad


def check_c11(cfg: CheckConfig) -> tuple[bool, dict]:
    q = cons.Q_GIVEN
    samples = 200
    pd = gram_signature(q) == (3, 0)
    m = min_nonzero_norm(q) if pd else None
    good, bad = _det_identity(q, random.Random(cfg.seed + 11), samples)
    qd = cons.q_derived()
    good_d, _ = _det_identity(qd, random.Random(cfg.seed + 11), samples)
    ok = pd and m == 3 and good == samples
    return ok, {
        "pd": pd,
        "min": m,
        "det_identity_samples": samples,
        "det_identity_holds": good,
        "counterexample": bad,
        "derived_form": qd.to_json(),
        "derived_form_min": min_nonzero_norm(qd),
        "derived_form_identity_holds": good_d,
    }


# -- C12: the period point j0 ------------------------------------------------------------------------------


def check_c12(cfg: CheckConfig) -> tuple[bool, dict]:
    grid = [complex(x, y) for x in (-1.0, -0.5, 0.0, 0.5, 1.0) for y in (0.25, 0.5, 1.0, 2.0, 3.5)]
    worst = 0.0
    ortho = 0.0
    ws = [cons._complex_vec(w) for w in cons.W_VECTORS]
    for tau in grid:
        p = cons.j0(tau)
        worst = max(worst, abs(p.norm + 2 * math.sqrt(3) * tau.imag))
        for w in ws:
            ortho = max(ortho, abs(cons.lambda_form(p.coordinates, w)))
    p_rho = cons.j0(RHO)
    lattice_vec = tuple(OMEGA * a + b for a, b in zip(*cons.V_VECTORS))
    exact_norm = hermitian_pair(lattice_vec, lattice_vec, cons.LAMBDA_GRAM)
    prop = max(abs(a - b.to_complex()) for a, b in zip(p_rho.coordinates, lattice_vec))
    witness = cons.norm_minus3_witness(RHO)
    ok = (
        worst < 1e-9
        and ortho < 1e-9
        and abs(p_rho.norm + 3) < 1e-9
        and exact_norm == EisensteinInt(-3)
        and prop < 1e-12
        and witness is not None
    )
    return ok, {"grid_points": len(grid), "max_norm_error": worst, "max_pairing_with_L0": ortho,
                "norm_at_w": p_rho.norm, "lattice_vector_norm": _pair(exact_norm),
                "proportional": prop < 1e-12}


# -- C13: modular sanity ----------------------------------------------------------------------------------


def check_c13(cfg: CheckConfig) -> tuple[bool, dict]:
    rng = random.Random(cfg.seed + 13)
    j_i = j_invariant(1j)
    j_rho = j_invariant(RHO)
    worst = 0.0
    for _ in range(50):
        tau = complex(rng.uniform(-1, 1), rng.uniform(0.8, 1.5))
        j = j_invariant(tau)
        worst = max(worst, abs(j_invariant(tau + 1) - j), abs(j_invariant(-1 / tau) - j))
    ok = abs(j_i - 1728) < 1e-4 and abs(j_rho) < 1e-6 and worst < 1e-8
    return ok, {"j_i": j_i.real, "abs_j_w": abs(j_rho), "samples": 50, "max_invariance_error": worst}


# -- C14: Hesse pencil ---------------------------------------------------------------------------------------


def check_c14(cfg: CheckConfig) -> tuple[bool, dict]:
    res = {
        "0": classify_lambda(0).order,
        "1": classify_lambda(1).order,
        "lambda_star": classify_lambda(LAMBDA_STAR).order,
        "1/2": classify_lambda(0.5).order,
    }
    j_star = hesse_j(LAMBDA_STAR)
    try:
        classify_lambda(-0.5)
        rejected = False
    except ValueError:
        rejected = True
    ok = (
        res == {"0": 648, "1": 648, "lambda_star": 108, "1/2": 54}
        and abs(j_star - 1728) < 1e-6
        and rejected
        and not is_smooth_hesse(-0.5)
    )
    return ok, {"classes": res, "lambda_star": LAMBDA_STAR, "hesse_j_at_lambda_star": j_star.real,
                "singular_rejected": rejected}


# -- C15: agreement of the two classifiers ----------------------------------------------------------------------


def check_c15(cfg: CheckConfig) -> tuple[bool, dict]:
    rng = random.Random(cfg.seed + 15)
    grid = fundamental_grid(cfg.grid)
    points = list(grid)
    for _ in range(10):
        tau, _ = random_translate(rng.choice(grid), rng)
        points.append(tau)
    agree = 0
    counts = {c.name: 0 for c in StabilizerClass}
    mismatches = []
    for tau in points:
        a = cons.stabilizer_class_lattice(tau)
        b = classify_tau_elliptic(tau)
        if a == b:
            agree += 1
            counts[a.name] += 1
        else:
            mismatches.append([tau.real, tau.imag, a.name, b.name])
    ok = agree == len(points)
    return ok, {"grid_points": len(points), "agreements": agree, "classes": counts,
                "mismatches": mismatches}


REGISTRY: dict[str, Callable[[CheckConfig], tuple[bool, dict]]] = {
    f"C{i}": fn
    for i, fn in enumerate(
        [check_c1, check_c2, check_c3, check_c4, check_c5, check_c6, check_c7, check_c8,
         check_c9, check_c10, check_c11, check_c12, check_c13, check_c14, check_c15],
        start=1,
    )
}


def valid_ids() -> list[str]:
    return list(REGISTRY)


def run_check(check_id: str, config: CheckConfig | None = None) -> CheckReport:
    cfg = config or CheckConfig()
    key = check_id.upper()
    if key not in REGISTRY:
        raise KeyError(f"unknown check {check_id!r}; valid ids: {', '.join(valid_ids())}")
    t0 = time.perf_counter()
    try:
        ok, detail = REGISTRY[key](cfg)
    except Exception as exc:  # a crash is a failure with its message as counterexample
        ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
    ms = (time.perf_counter() - t0) * 1000
    return CheckReport(key, "pass" if ok else "fail", detail, ms)


def run_all(config: CheckConfig | None = None, ids=None) -> list[CheckReport]:
    return [run_check(i, config) for i in (ids or valid_ids())]
