"""Identity suite tests, including negative controls.

The corrupted builder set perturbs exactly one coefficient of the shifted
series; the checks that consume it must fail with a localized first
difference, proving the comparisons are not vacuous.
"""

from __future__ import annotations

import json

from eisentheta.eisenstein import EisInt
from eisentheta import builders
from eisentheta.series import Monomial, TriSeries
from eisentheta.identities import (
    BuilderSet,
    check_corollary1,
    check_corollary2,
    check_lemma_symmetries,
    check_special_cases_w1,
    check_theorem1,
    check_theorem2,
    oracle_equivalence_reports,
    reports_to_json,
    run_all,
)


def _perturb_first_term(series: TriSeries) -> TriSeries:
    terms = series.terms
    first = min(terms)
    terms[first] = terms[first] + EisInt(1, 0)
    return TriSeries(series.order3, terms)


def corrupted_builders() -> BuilderSet:
    """Real builders, except c_k for k != 0 has one coefficient off by one."""

    def bad_c(k: int, n: int) -> TriSeries:
        series = builders.build_c(k, n)
        if k % 3 == 0 or n == 0:
            return series
        return _perturb_first_term(series)

    return BuilderSet(builders.build_a, builders.build_b, bad_c)


def test_lemma_symmetries():
    assert check_lemma_symmetries(0).ok
    report = check_lemma_symmetries(6)
    assert report.ok
    assert report.params["chains"] == 21


def test_theorem1_all_classes():
    assert check_theorem1(0, 0).ok
    for k in (0, 1, 2):
        assert check_theorem1(k, 6).ok


def test_theorem1_congruence_and_monotonicity():
    high = check_theorem1(4, 5)
    low = check_theorem1(1, 3)
    assert high.ok and low.ok
    assert high.params["k"] == 1
    assert check_theorem1(1, 5).to_dict() == high.to_dict()


def test_corollary1():
    report = check_corollary1(5, one_var_order=14)
    assert report.ok
    assert report.params == {"order": 5, "one_var_order": 14}


def test_theorem2_all_classes():
    assert check_theorem2(0, 0).ok
    for k in (0, 1, 2):
        assert check_theorem2(k, 6).ok


def test_theorem2_k0_equals_plain_bilinear():
    assert check_theorem2(0, 5).to_dict()["params"] == {"k": 0, "order": 5}
    assert builders.build_c(0, 5) == builders.build_a(5)


def test_corollary2_reports():
    printed, derived, one_var = check_corollary2(5, one_var_order=14)
    assert not printed.asserted
    assert printed.status == "fail"
    assert printed.first_diff is not None
    assert printed.first_diff.monomial == Monomial(3, -6, 0)
    assert derived.asserted and derived.ok
    assert one_var.asserted and one_var.ok


def test_special_cases_w1():
    assert check_special_cases_w1(0).ok
    assert check_special_cases_w1(8).ok


def test_oracle_equivalence_reports():
    reports = oracle_equivalence_reports(8)
    assert [r.identity for r in reports] == [
        "oracle.a_z", "oracle.a_w", "oracle.b_w", "oracle.c_z",
    ]
    assert all(r.ok for r in reports)


def test_run_all_shape_and_status():
    reports = run_all(3, coset_bound=1)
    names = [r.identity for r in reports]
    assert names == [
        "lemma",
        "thm1", "thm1", "thm1",
        "cor1",
        "thm2", "thm2", "thm2",
        "cor2", "cor2", "cor2",
        "special",
        "coset.M_action", "coset.N_action", "coset.phi_pullback",
        "coset.V_stability", "coset.partition",
    ]
    for report in reports:
        if report.asserted:
            assert report.ok, report.to_dict()
        else:
            assert report.status == "fail"  # the printed display

    parsed = json.loads(reports_to_json(reports))
    assert len(parsed) == len(reports)
    assert all(set(r) >= {"identity", "params", "status", "first_diff", "asserted"}
               for r in parsed)


def test_run_all_at_order_zero():
    for report in run_all(0, coset_bound=0):
        if report.asserted:
            assert report.ok, report.to_dict()


def test_mutated_comparison_fails_localized():
    # negative control without builders: compare the plain series against
    # the twisted one as if they were claimed equal
    a = builders.build_a(1)
    b = builders.build_b(1, 1)
    diff = a.difference_to_order(b, 1)
    assert diff is not None
    assert diff.monomial == Monomial(3, -6, 0)


def test_corrupted_builder_breaks_theorem1():
    bad = corrupted_builders()
    report = check_theorem1(1, 4, lattice=bad)
    assert report.status == "fail"
    assert report.first_diff is not None
    assert report.first_diff.monomial.q3 <= 6


def test_corrupted_builder_breaks_oracle_comparison():
    bad = corrupted_builders()
    reports = oracle_equivalence_reports(4, lattice=bad)
    by_name = {r.identity: r for r in reports}
    assert by_name["oracle.a_z"].ok
    assert by_name["oracle.a_w"].ok
    assert by_name["oracle.b_w"].ok
    failed = by_name["oracle.c_z"]
    assert failed.status == "fail"
    assert failed.first_diff is not None
    # localized at the image of the perturbed lowest monomial
    assert failed.first_diff.monomial.q3 == 1


def test_corrupted_builder_breaks_run_all_locally():
    reports = run_all(3, coset_bound=0, lattice=corrupted_builders())
    by_name: dict[str, list] = {}
    for r in reports:
        by_name.setdefault(r.identity, []).append(r)
    assert any(r.status == "fail" for r in by_name["thm1"])
    assert all(r.ok for r in by_name["coset.M_action"])


def test_report_json_shape():
    report = check_theorem1(1, 2)
    data = report.to_dict()
    assert data == {
        "identity": "thm1",
        "params": {"k": 1, "order": 2},
        "status": "ok",
        "first_diff": None,
        "asserted": True,
    }

    bad = check_corollary2(2)[0]
    data = bad.to_dict()
    assert data["status"] == "fail"
    assert set(data["first_diff"]) == {"monomial", "lhs", "rhs"}
