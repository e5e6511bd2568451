"""Acceptance criteria C3..C15.

Each test runs the registry check, records a one-line verdict (echoed in the
terminal summary and on stdout with ``-s``) and asserts both the overall
status and the headline numbers in the detail.
"""

import pytest

from eisenlattice.checks import CheckConfig, run_check

CFG = CheckConfig()


@pytest.fixture
def run(acceptance_log):
    def _run(check_id):
        report = run_check(check_id, CFG)
        line = report.summary_line()
        acceptance_log.append(line)
        print(line)
        return report

    return _run


def test_c3_discriminant_of_d3(run):
    r = run("C3")
    assert r.passed, r.detail
    assert r.detail["order"] == 9
    assert r.detail["invariant_factors"] == [[2, 1], [2, 1]]
    assert r.detail["isomorphic_to_V"] is True


def test_c4_norm_two_vectors_and_weyl_group(run):
    r = run("C4")
    assert r.passed, r.detail
    assert (r.detail["norm2_vectors"], r.detail["weyl_order"], r.detail["orbits"]) == (54, 54, 1)


def test_c5_automorphisms_of_d3(run):
    r = run("C5")
    assert r.passed, r.detail
    assert r.detail["aut_order"] == 1296
    assert r.detail["kernel_equals_weyl"] is True
    assert r.detail["image_order"] == 24


def test_c6_automorphisms_of_v(run):
    r = run("C6")
    assert r.passed, r.detail
    assert r.detail["order"] == 24
    assert r.detail["abelian"] is False and r.detail["involutions"] == 1


def test_c7_aut_h_membership_and_norm_formula(run):
    r = run("C7")
    assert r.passed, r.detail
    assert r.detail["members_accepted"] == 1000
    assert r.detail["perturbed_rejected"] == 1000
    assert r.detail["norm_formula_ok"] == r.detail["norm_formula_box"]
    assert r.detail["transitivity_witnesses"] == 50


def test_c8_glue_and_explicit_embedding(run):
    r = run("C8")
    assert r.passed, r.detail
    assert r.detail["glue_index"] == 9
    assert r.detail["glue_det"] in ([1, 0], [-1, 0])
    assert sorted(r.detail["glue_signature"]) == [1, 4]
    assert r.detail["l0_isometric_to_d3"] and r.detail["l0_primitive"]
    assert r.detail["complement_equals_m0"]
    assert r.detail["m0_gram"]["entries"] == [[0, 0], [1, 2], [-1, -2], [0, 0]]


def test_c9_isotropic_planes(run):
    r = run("C9")
    assert r.passed, r.detail
    assert r.detail["graph_type_planes"] == 24
    assert r.detail["blockwise_order"] == 576
    assert r.detail["blockwise_transitive"] is True


def test_c10_triflections(run):
    r = run("C10")
    assert r.passed, r.detail
    assert r.detail["sigma_a1_is_diag_1_1_w"] and r.detail["order_3"] and r.detail["integral"]
    assert r.detail["image_order"] == 24


def test_c11_form_q(run):
    r = run("C11")
    assert r.passed, r.detail


def test_c12_period_point(run):
    r = run("C12")
    assert r.passed, r.detail
    assert r.detail["grid_points"] == 25
    assert r.detail["max_norm_error"] < 1e-9
    assert r.detail["proportional"] is True


def test_c13_modular_sanity(run):
    r = run("C13")
    assert r.passed, r.detail
    assert abs(r.detail["j_i"] - 1728) < 1e-4
    assert r.detail["abs_j_w"] < 1e-6
    assert r.detail["samples"] == 50 and r.detail["max_invariance_error"] < 1e-8


def test_c14_hesse_classification(run):
    r = run("C14")
    assert r.passed, r.detail
    assert r.detail["classes"] == {"0": 648, "1": 648, "lambda_star": 108, "1/2": 54}
    assert abs(r.detail["hesse_j_at_lambda_star"] - 1728) < 1e-6
    assert r.detail["singular_rejected"] is True


def test_c15_classifiers_agree(run):
    r = run("C15")
    assert r.passed, r.detail
    assert r.detail["grid_points"] == 50 == r.detail["agreements"]
