import math

import pytest

import mzvkit


def test_classical_values():
    assert mzvkit.zeta([2]) == pytest.approx(math.pi**2 / 6, abs=1e-12)
    assert mzvkit.zeta([1, 2]) == pytest.approx(mzvkit.zeta([3]), abs=1e-12)
    assert mzvkit.zeta_star([1, 2]) == pytest.approx(2 * mzvkit.zeta([3]), abs=1e-12)


def test_hurwitz_and_polylog():
    assert mzvkit.hurwitz_zeta([2], 1.0) == pytest.approx(math.pi**2 / 6 - 1, abs=1e-12)
    value, error = mzvkit.li([1], 0.5)
    assert value == pytest.approx(math.log(2), abs=1e-10)
    assert error < 1e-10


def test_kawashima_methods_agree():
    expected = 2 - 2 * math.log(2)
    for method in ("taylor", "theorem"):
        value, _ = mzvkit.kawashima([1], 0.5, method=method)
        assert value == pytest.approx(expected, abs=1e-9)


def test_regularized_polynomial():
    assert mzvkit.stuffle_reduce([1, 1]) == "T²/2 − 1/2·(2)"


def test_errors_raise():
    with pytest.raises(mzvkit.MzvError):
        mzvkit.zeta([2, 1])
    with pytest.raises(ValueError):
        mzvkit.kawashima([1], 0.9)


def test_small_suite_passes():
    report = mzvkit.run_suite("andipode", max_weight=3)
    assert report["passed"]
    assert report["checks"] > 0
    assert "stuffle-exact" in mzvkit.suite_names()
