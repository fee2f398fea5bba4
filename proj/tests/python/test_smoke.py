import math

import pytest

import bohr_lab


def test_constants():
    assert bohr_lab.distance_bound(0.5) == pytest.approx(math.log(2), abs=1e-12)
    assert bohr_lab.dilog(1.0) == pytest.approx(math.pi**2 / 6, abs=1e-14)
    assert bohr_lab.log_tail(2, 0.5) == pytest.approx(0.193147180559945, abs=1e-14)


def test_radius():
    r = bohr_lab.radius("rogosinski", 0.1, n=2)
    assert abs(r["root"] - 0.2771) <= 1e-4
    assert r["variant"] == "proof"
    assert bohr_lab.radius("area-linear", 0.9)["variant"] == "statement"


def test_lhs_matches_series():
    value, tail, _ = bohr_lab.lhs_series("squared-coefficients", 0.5, 0.5)
    assert abs(value - bohr_lab.lhs("squared-coefficients", 0.5, 0.5)) <= tail + 1e-10


def test_tables():
    ids = bohr_lab.table_ids()
    assert len(ids) == 8
    rep = bohr_lab.reproduce("T1")
    assert (rep["passed"], rep["flagged"], rep["failed"]) == (35, 1, 0)
    assert bohr_lab.reproduce("T4", "proof")["failed"] > 0


def test_errors():
    with pytest.raises(ValueError):
        bohr_lab.radius("rogosinski", 1.0, n=2)
    with pytest.raises(ValueError):
        bohr_lab.radius("rogosinski", 0.5)
    with pytest.raises(KeyError):
        bohr_lab.reproduce("T9")
    with pytest.raises(bohr_lab.SolverError):
        bohr_lab.radius("refined-r", 0.1, variant="statement")


def test_suite():
    rep = bohr_lab.run_suite("discrepancy")
    assert rep["ok"]
    assert rep["checks"] > 0
