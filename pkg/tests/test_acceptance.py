"""Acceptance gate: every criterion of the verification grid at its frozen
tolerance, one pass/fail line per criterion.

The runners live in jacobi_freeze.verify (shared with `jacobi-freeze
verify-all`); this module pins them as the test-suite exit criteria.
Monte Carlo criteria use the library's frozen default seed.
"""

import pytest

from jacobi_freeze import verify


def report(name: str, checks) -> None:
    status = "PASS" if all(c.passed for c in checks) else "FAIL"
    detail = "; ".join(
        f"{c.name}={c.actual}" + ("" if c.tolerance == 0.0 else f" (tol {c.tolerance:g})")
        for c in checks
    )
    print(f"ACCEPTANCE {name}: {status}  [{detail}]")


def assert_criterion(name: str, checks) -> None:
    report(name, checks)
    failed = [c for c in checks if not c.passed]
    assert not failed, f"{name} failed: {failed}"


def test_01_stationarity():
    assert_criterion("01-stationarity", verify.criterion_stationarity())


def test_02_discriminant_identity():
    assert_criterion("02-discriminant", verify.criterion_discriminant())


def test_03_product_identities():
    assert_criterion("03-products", verify.criterion_products())


def test_04_determinant_algebraic():
    assert_criterion("04-determinant-algebraic", verify.criterion_det_algebraic())


def test_05_spectrum():
    assert_criterion("05-spectrum", verify.criterion_spectrum())


def test_06_eigenvector_structure():
    assert_criterion("06-eigenvectors", verify.criterion_eigenvectors())


def test_07_cross_relation():
    assert_criterion("07-cross-relation", verify.criterion_cross_relation())


def test_08_selberg_normalization():
    assert_criterion("08-selberg-normalization", verify.criterion_selberg())


def test_09_lln():
    assert_criterion("09-lln", verify.criterion_lln())


def test_10_clt():
    assert_criterion("10-clt", verify.criterion_clt())


def test_11_hermite_limit():
    assert_criterion("11-hermite-limit", verify.criterion_hermite())


def test_12_laguerre_limit():
    assert_criterion("12-laguerre-limit", verify.criterion_laguerre())


def test_13_determinism():
    assert_criterion("13-determinism", verify.criterion_determinism())


def test_grid_is_the_specified_one():
    # The identity criteria must cover the full verification grid.
    assert verify.GRID_SIZES == (1, 2, 3, 5, 8, 16, 32, 64)
    assert verify.GRID_AB == ((0.0, 1.0), (1.0, 1.0), (2.0, 0.5), (0.5, 3.0))
    assert len(verify.GRID) == 32
