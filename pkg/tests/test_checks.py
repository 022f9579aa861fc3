import pytest

from weylmahonian.checks import (
    REGISTRY,
    CheckReport,
    default_grid,
    run_all,
    run_identity_check,
)


def test_run_identity_check_by_name():
    rep = run_identity_check("symmetry_qt_a", {"d": 3})
    assert isinstance(rep, CheckReport)
    assert rep.passed
    rep = run_identity_check("direct_vs_recursive", {"family": "BC", "d": 3, "euler": False})
    assert rep.passed
    with pytest.raises(KeyError):
        run_identity_check("no_such_check", {})


def test_reports_serialize():
    rep = run_identity_check("low_degree_agreement", {"d": 4})
    obj = rep.to_json()
    assert obj["name"] == "low_degree_agreement"
    assert obj["passed"] is True
    assert obj["discrepancy"] is None


def test_failure_reports_discrepancy():
    # compare two genuinely different polynomials through the report helper
    from weylmahonian.checks import _poly_report
    from weylmahonian.algebra import MultiPoly

    q = MultiPoly.var("q")
    rep = _poly_report("adhoc", {}, 1 + q, 1 + q + q**2)
    assert not rep.passed
    assert "q^2" in rep.discrepancy


def test_default_grids_respect_limits():
    grid = default_grid("direct_vs_recursive", max_d=2)
    assert grid and all(params["d"] <= 2 for params in grid)
    grid = default_grid("flag_series_theorem", primes=[3], trunc=6)
    assert grid and all(p["p"] == 3 and p["trunc"] == 6 for p in grid)


def test_registry_names_are_stable():
    expected = {
        "direct_vs_recursive",
        "d_euler_direct_vs_recursive",
        "symmetry_qt_a",
        "low_degree_agreement",
        "flag_series_theorem",
        "subspace_count_grassmann",
        "canonical_cell_counts",
        "length_vs_bfs",
        "rothe_worked_examples",
    }
    assert expected <= set(REGISTRY)


def test_non_gating_check_is_marked():
    rep = run_identity_check("d_euler_direct_vs_recursive", {"d": 2})
    assert rep.gating is False


def test_run_all_small_slice():
    reports = run_all(["qbinomial_theorem", "central_element_identities"], max_d=2)
    assert reports
    assert all(r.passed for r in reports)
