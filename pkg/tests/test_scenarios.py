"""Scenario runners: computed facts, restated claims, report invariants."""

import pytest

from regdecomp.scenarios import (
    UsageError,
    run_counterexample_quotient,
    run_counterexample_zn,
    run_examples_suite,
    run_positive_example,
    run_scan,
)

REPORT_KEYS = [
    "scenario",
    "parameters",
    "field",
    "group",
    "minimal",
    "det_is_zero",
    "det",
    "certificates",
    "conjecture_verdict",
]


def test_report_key_order_is_stable():
    result = run_positive_example(3, 5, 11)
    assert list(result.report.to_dict().keys()) == REPORT_KEYS


# -- counterexample-zn ---------------------------------------------------------------


def test_zn_5_3_minimal_with_unit_determinant():
    result = run_counterexample_zn(5, 3)
    rep = result.report
    assert rep.minimal is True
    assert rep.certificates["radical_order"] == 1
    assert rep.certificates["equal_column_pair"] is None
    # the decomposition matrix factors through the prime-to-2t CRT split,
    # so its determinant is a unit: det = 1 exactly here
    assert rep.det_is_zero is False
    assert rep.det == "coeffs=[1,0] mod (1,1,1) over GF(5)"
    # the factorized commutation matrix IS singular; the claimed equality
    # of the two determinants is what fails
    assert rep.certificates["det_d_matrix_is_zero"] is True
    assert rep.claim_failures == ["det_is_zero"]
    assert rep.conjecture_verdict == "consistent"
    assert result.exit_code == 2


def test_zn_3_5_minimal_with_unit_determinant():
    result = run_counterexample_zn(3, 5)
    rep = result.report
    assert rep.minimal is True
    assert rep.det_is_zero is False
    assert rep.certificates["matrix_dimension"] == 100
    assert rep.det == "coeffs=[1,0,0,0] mod (1,0,1,1,1) over GF(3)"
    assert rep.claim_failures == ["det_is_zero"]


@pytest.mark.parametrize("p,t", [(3, 3), (5, 4), (2, 3), (5, 2)])
def test_zn_rejects_bad_parameters(p, t):
    with pytest.raises(UsageError):
        run_counterexample_zn(p, t)


# -- counterexample-quotient ------------------------------------------------------------


@pytest.mark.parametrize("p", [3, 5])
def test_quotient_scenario_aborts_with_certificate(p):
    result = run_counterexample_quotient(p)
    rep = result.report
    assert result.exit_code == 2
    failure = rep.certificates["failure"]
    assert failure["stage"] == "cocycle-construction"
    assert failure["law"] == "cocycle-identity"
    assert failure["witness"] is not None
    assert failure["roots_of_unity_of_order_p_in_field"] == 1
    assert rep.minimal is None and rep.det_is_zero is None
    assert rep.conjecture_verdict is None
    assert set(rep.claim_failures) == {
        "cocycle_valid",
        "radical_proper_nontrivial",
        "minimal",
        "p_divides_quotient_order",
        "det_is_zero",
    }


def test_quotient_scenario_rejects_even_characteristic():
    with pytest.raises(UsageError):
        run_counterexample_quotient(2)


# -- positive example ----------------------------------------------------------------------


def test_positive_example_3_5_11():
    result = run_positive_example(3, 5, 11)
    rep = result.report
    assert result.exit_code == 0
    assert rep.minimal is True and rep.det_is_zero is False
    assert rep.conjecture_verdict == "consistent"
    certs = rep.certificates
    assert certs["radical_order"] == 10
    assert certs["quotient_group"] == "Z_2 x Z_2"
    assert certs["center_dimension"] == 1
    assert certs["square_identity"] is True
    # det^2 = 4^4 = 256 = 1 mod 3
    assert certs["det_squared"] == "coeffs=[1] mod (0,1) over GF(3)"
    assert certs["det_squared"] == certs["group_order_power"]
    assert rep.claim_failures == []


def test_positive_example_5_3_7():
    result = run_positive_example(5, 3, 7)
    rep = result.report
    assert result.exit_code == 0
    assert rep.minimal is True
    assert rep.certificates["quotient_order"] % 5 != 0
    assert rep.det_is_zero is False


@pytest.mark.parametrize(
    "p,q,q1",
    [
        (3, 7, 11),   # gcd(3, 6) != 1
        (3, 5, 13),   # gcd(3, 12) != 1
        (3, 5, 5),    # q = q1
        (3, 3, 11),   # q = p
        (4, 5, 11),   # p not prime
    ],
)
def test_positive_example_rejects_bad_parameters(p, q, q1):
    with pytest.raises(UsageError):
        run_positive_example(p, q, q1)


# -- worked examples -------------------------------------------------------------------------


def test_examples_suite_outcomes():
    results = {r.report.scenario: r for r in run_examples_suite()}
    assert results["example-anticommuting-z2"].exit_code == 0
    assert results["example-anticommuting-z2"].report.det == "coeffs=[3] mod (0,1) over GF(5)"
    non = results["example-nonminimal-z2xz2"].report
    assert non.minimal is False and non.det_is_zero is True
    assert non.certificates["claim_failures"] == []
    assert non.certificates["coarsened_matrix"] == [
        ["coeffs=[1] mod (0,1) over GF(5)", "coeffs=[1] mod (0,1) over GF(5)"],
        ["coeffs=[1] mod (0,1) over GF(5)", "coeffs=[4] mod (0,1) over GF(5)"],
    ]
    assert non.conjecture_verdict == "consistent"
    for n in (2, 3, 4):
        assert results[f"example-pauli-grading-n{n}"].exit_code == 0
    assert results["example-twisted-tensor-square"].exit_code == 0
    # the determinant sweep: disagreements exist at n = 2 but not n = 4
    sweep2 = results["example-det-comparison-n2"].report
    assert sweep2.claim_failures == ["determinants_agree_everywhere"]
    assert sweep2.certificates["mismatches"] == 4
    sweep4 = results["example-det-comparison-n4"].report
    assert sweep4.claim_failures == []
    assert sweep4.certificates["mismatches"] == 0


def test_examples_nonminimal_witness_columns():
    results = {r.report.scenario: r for r in run_examples_suite()}
    non = results["example-nonminimal-z2xz2"].report
    assert non.certificates["equal_column_pair"] == ["(0,1)", "(1,0)"]


# -- scan --------------------------------------------------------------------------------------


def test_scan_classifications():
    results = run_scan(12, 3, seed=1)
    assert len(results) > 20
    families = {r.report.parameters["family"] for r in results}
    assert {"trivial", "carry", "sign", "random"} <= families
    for r in results:
        rep = r.report
        p_divides = rep.certificates["p_divides_group_order"]
        # char divides |G| forces a singular matrix
        if p_divides:
            assert rep.det_is_zero
        # minimality forces a unit determinant (rows are independent characters)
        if rep.minimal:
            assert not rep.det_is_zero
        # every twisted group algebra instance is consistent with the
        # minimal-iff-invertible equivalence
        assert rep.conjecture_verdict == "consistent"
        # the corrected square law holds unconditionally
        assert rep.certificates["square_radical_blocks"] is True
        # the plain square identity holds exactly when the radical is
        # trivial or |G| vanishes in the field
        expected_square = rep.certificates["radical_order"] == 1 or p_divides
        assert rep.certificates["square_identity"] == expected_square
    # trivial cocycle on a nontrivial group is never minimal
    for r in results:
        if r.report.parameters["family"] == "trivial":
            assert r.report.minimal is False


def test_scan_is_deterministic():
    a = [r.report.to_dict() for r in run_scan(8, 5, seed=9)]
    b = [r.report.to_dict() for r in run_scan(8, 5, seed=9)]
    assert a == b


def test_scan_seed_changes_random_family():
    a = [r.report.to_dict() for r in run_scan(8, 5, seed=1)]
    b = [r.report.to_dict() for r in run_scan(8, 5, seed=2)]
    assert a != b


def test_scan_rejects_oversized_bound():
    with pytest.raises(UsageError):
        run_scan(1000, 3)
