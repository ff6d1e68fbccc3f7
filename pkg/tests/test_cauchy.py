import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyregions.cauchy import cauchy_radius, majorant_value, sign_changes

GOLDEN = (1 + math.sqrt(5)) / 2


def test_golden_ratio():
    res = cauchy_radius(1.0, [1.0, 1.0])
    assert abs(res.rho - GOLDEN) <= 1e-14
    assert abs(res.residual) <= 1e-12


def test_mass_spring_newton_radius():
    # x^2 - 2x - 16 = 0
    assert cauchy_radius(1.0, [16.0, 2.0]).rho == pytest.approx(1 + math.sqrt(17), abs=1e-13)


def test_all_zero_gives_zero():
    res = cauchy_radius(3.0, [0.0, 0.0, 0.0])
    assert res.rho == 0.0 and res.iterations == 0


def test_linear():
    # 2x - 3 = 0 with ||A_1^{-1}|| = 1/2
    assert cauchy_radius(0.5, [3.0]).rho == pytest.approx(1.5, rel=1e-15)


def test_small_root_below_one():
    # x^2 - 1e-6 = 0
    assert cauchy_radius(1.0, [1e-6, 0.0]).rho == pytest.approx(1e-3, rel=1e-14)


def test_only_higher_term_nonzero():
    # x^3 - 5 x^2 = 0 -> rho = 5
    assert cauchy_radius(1.0, [0.0, 0.0, 5.0]).rho == pytest.approx(5.0, rel=1e-15)


@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
def test_bad_leading(bad):
    with pytest.raises(ValueError):
        cauchy_radius(bad, [1.0])


def test_negative_lower_norm():
    with pytest.raises(ValueError):
        cauchy_radius(1.0, [1.0, -0.5])


def test_empty_lower():
    with pytest.raises(ValueError):
        cauchy_radius(1.0, [])


def _random_instance(rng):
    n = int(rng.integers(1, 7))
    b = rng.uniform(0, 1, n) * (rng.uniform(size=n) < 0.8)
    if not b.any():
        b[rng.integers(n)] = rng.uniform(0.1, 1)
    return rng.uniform(0.5, 2.0), b


def test_unique_sign_change(rng):
    for _ in range(200):
        inv, b = _random_instance(rng)
        rho = cauchy_radius(inv, b).rho
        assert sign_changes(inv, b, rho) == 1


def test_scale_equivariance(rng):
    for _ in range(200):
        inv, b = _random_instance(rng)
        s = 10.0 ** rng.uniform(-3, 3)
        r1 = cauchy_radius(inv, b).rho
        r2 = cauchy_radius(inv / s, s * b).rho
        assert r2 == pytest.approx(r1, rel=1e-12)


def test_bracket_contains_root(rng):
    for _ in range(100):
        inv, b = _random_instance(rng)
        res = cauchy_radius(inv, b)
        lo, hi = res.bracket
        assert lo <= res.rho <= hi
        assert majorant_value(inv, b, lo) <= 0 < majorant_value(inv, b, hi)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.floats(0, 100), min_size=1, max_size=6),
    st.integers(0, 5),
    st.floats(1e-3, 100),
)
def test_monotone_in_lower_norms(b, k, bump):
    k = k % len(b)
    if not any(b):
        b[0] = 1.0
    bigger = list(b)
    bigger[k] += bump
    assert cauchy_radius(1.3, bigger).rho >= cauchy_radius(1.3, b).rho * (1 - 1e-14)


def test_matches_numpy_roots(rng):
    for _ in range(100):
        inv, b = _random_instance(rng)
        coeffs = np.concatenate([[1 / inv], -b[::-1]])
        roots = np.roots(coeffs)
        pos = max(r.real for r in roots if abs(r.imag) < 1e-7 and r.real > 0)
        assert cauchy_radius(inv, b).rho == pytest.approx(pos, rel=1e-8)
