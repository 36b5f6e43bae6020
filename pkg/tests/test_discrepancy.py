import math
import random

import numpy as np
import pytest

from icg2t.discrepancy import (
    PointSet,
    brute_force_discrepancy,
    empirical_exponent,
    erdos_turan_bound,
    exact_discrepancy,
    points_from_params,
    theorem_bounds,
)
from icg2t.errors import DomainError
from icg2t.generator import GeneratorParams


def test_fixtures():
    assert exact_discrepancy(PointSet([0.5])) == pytest.approx(1.0)
    n = 64
    equi = PointSet([i / n for i in range(n)])
    assert exact_discrepancy(equi) == pytest.approx(1 / n)
    quarter = PointSet([3 / 16, 7 / 16, 11 / 16, 15 / 16])
    assert exact_discrepancy(quarter) == pytest.approx(0.25)


def test_formula_matches_oracle():
    rng = random.Random(5)
    for size in (1, 2, 3, 17, 100, 1024):
        pts = PointSet([rng.random() for _ in range(size)])
        assert exact_discrepancy(pts) == pytest.approx(
            brute_force_discrepancy(pts), abs=1e-12
        )


def test_oracle_size_limit():
    with pytest.raises(DomainError):
        brute_force_discrepancy(PointSet(np.linspace(0, 0.999, 5000)))


def test_discrepancy_range():
    rng = random.Random(6)
    for size in (4, 64, 333):
        d = exact_discrepancy(PointSet([rng.random() for _ in range(size)]))
        assert 1 / size - 1e-12 <= d <= 1.0


def test_erdos_turan_clipping_and_value():
    # all |S_h| = 0: bound is C1/(H+1), clipped at 1
    assert erdos_turan_bound([0.0], 4, 1) == 1.0
    assert erdos_turan_bound([0.0] * 64, 100, 64) == pytest.approx(3 / 65)
    assert erdos_turan_bound([10.0], 10, 1, c1=0.0, c2=1.0) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        erdos_turan_bound([1.0], 4, 2)  # magnitudes too short


def test_erdos_turan_dominates_exact():
    p = GeneratorParams(g=3, a=1, b=2, c=0, t=12)
    ps = points_from_params(p, 0, 200)
    x = np.asarray(ps.points)
    h = np.arange(1, 65)
    mags = np.abs(np.exp(2j * np.pi * np.outer(h, x)).sum(axis=1))
    d = exact_discrepancy(ps)
    for big_h in (1, 8, 64):
        assert d <= erdos_turan_bound(mags, 200, big_h) + 1e-12


def test_theorem_bounds_shape():
    tb = theorem_bounds(1 << 10, 16, 3)
    rho = math.log(1 << 10) / 16
    assert tb.rho == pytest.approx(rho)
    assert tb.thm2 == pytest.approx(math.exp(-math.log(1 << 10) ** 3 / 16**2), rel=1e-12)
    assert tb.thm1 == pytest.approx((1 << 10) ** (1 - rho * rho), rel=1e-12)
    assert tb.thm1_hypothesis is False  # needs N > 2^24


def test_empirical_exponent():
    assert empirical_exponent(16, 8, 0.0) == math.inf
    # |S| = N means eta = 0
    assert empirical_exponent(16, 8, 16.0) == pytest.approx(0.0)
    eta = empirical_exponent(1 << 10, 16, 30.0)
    rho = math.log(1 << 10) / 16
    assert (1 << 10) ** (1 - eta * rho * rho) == pytest.approx(30.0, rel=1e-9)


def test_point_set_validation():
    with pytest.raises(DomainError):
        PointSet([1.0])
    with pytest.raises(DomainError):
        PointSet([])
