from fractions import Fraction

import pytest

from vwbm.cli import main
from vwbm.generators import generator_equation, verify_equation_numeric
from vwbm.rowspan import CurveParams
from vwbm.verify import (CheckResult, check_klein_orbits,
                         check_rowspan_identities, check_swap_symmetry,
                         run_suite, valid_pairs)


def test_valid_pairs_filter():
    pairs = valid_pairs(3)
    assert pairs == [(2, 3), (3, 2), (3, 3)]


def test_rowspan_identities_sweep():
    assert check_rowspan_identities(12).passed


def test_klein_orbit_sweep():
    assert check_klein_orbits(12).passed


def test_swap_symmetry_sweep():
    assert check_swap_symmetry(12).passed


def test_run_suite_levels():
    results = run_suite(6, "genus")
    assert [r.name for r in results] == ["genus triple agreement"]
    assert all(r.passed for r in results)
    assert len(run_suite(6, "trace-only")) == 2
    with pytest.raises(ValueError):
        run_suite(6, "bogus")
    with pytest.raises(ValueError):
        run_suite(2)


def test_run_suite_all_names_every_level():
    results = run_suite(6, "all")
    names = {r.name for r in results}
    assert len(results) == len(names) == 10


def test_parallel_map_via_env(monkeypatch):
    monkeypatch.setenv("VWBM_THREADS", "2")
    assert check_rowspan_identities(6).passed


def test_check_result_lines():
    ok = CheckResult("demo", True, stats={"pairs": 3})
    assert ok.line() == "PASS  demo (3 pairs)"
    bad = CheckResult("demo", False, "witness (2,3)")
    assert bad.line() == "FAIL  demo  [witness (2,3)]"


def test_cli_verify_reports_failure(monkeypatch, capsys):
    def fake_suite(nmax, level):
        return [CheckResult("stubbed check", False, "witness at (2,3)")]
    monkeypatch.setattr("vwbm.cli.run_suite", fake_suite)
    code = main(["verify", "6"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL  stubbed check  [witness at (2,3)]" in out
    assert out.strip().endswith("FAIL  overall (nmax=6)")


def test_subcommands_share_validation_contract(capsys):
    for argv in (["covers", "1", "5"], ["spectrum", "2", "2"],
                 ["generator", "0", "9"], ["surface", "1", "8"],
                 ["tracefield", "2", "1"]):
        code = main(argv)
        err = capsys.readouterr().err
        assert code == 2
        assert "n, m must exceed 1 and nm >= 6" in err


def test_numeric_check_accepts_exact_tolerance():
    params = CurveParams(2, 7)
    eq = generator_equation(params)
    check = verify_equation_numeric(eq, params, Fraction(1, 10 ** 9))
    assert check.ok and check.tolerance == 1e-9
