import math

import numpy as np
import pytest

import relaxed_wyner as rw


def test_scalar_values():
    assert rw.c_of_rho(0.5) == pytest.approx(math.log(math.sqrt(3.0)), abs=1e-15)
    assert rw.wyner_ci_scalar(0.5, 0.1) == pytest.approx(0.094603059, abs=1e-9)
    assert rw.wyner_ci_scalar(0.5, 10.0) == 0.0
    assert rw.mu_star(0.0) == math.inf


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        rw.wyner_ci_scalar(1.5, 0.0)
    with pytest.raises(ArithmeticError):
        rw.wyner_ci_vector(np.eye(1), np.eye(1), np.array([[2.0]]), 0.0)


def test_waterfill_and_vector():
    a = rw.waterfill([0.8, 0.8], 0.2)
    assert a.gammas == pytest.approx([0.1, 0.1], abs=1e-12)
    assert a.total_value == pytest.approx(2 * rw.wyner_ci_scalar(0.8, 0.1), abs=1e-11)

    r = rw.wyner_ci_vector(np.eye(2), np.eye(2), 0.5 * np.eye(2), 0.0)
    assert r["value"] == pytest.approx(2 * rw.c_of_rho(0.5), abs=1e-12)
    assert list(r["spectrum"]) == pytest.approx([0.5, 0.5], abs=1e-14)

    s = rw.canonical_correlations(np.eye(2), np.eye(2), np.full((2, 2), 0.5))
    assert list(s) == pytest.approx([1.0, 0.0], abs=1e-12)


def test_gray_wyner():
    r0, regime = rw.common_rate(1.0, 0.5, 0.75, 0.0)
    assert regime == "BLEND"
    assert rw.nu_star(0.5, 0.75, 0.0) == pytest.approx(0.75)
    assert rw.ell_of_nu(0.5, 0.75, 0.0, 0.75) == pytest.approx(r0, abs=1e-10)


def test_oracles():
    assert rw.oracle.dsbs_construction_check(0.25)["passed"]
    assert rw.oracle.erasure_construction_check(0.3)["passed"]
    report = rw.oracle.verify_graywyner_dual(0.5, 0.1, 0.5)
    assert report["passed"]
    assert report["checks"][0]["tolerance"] == 1e-8
