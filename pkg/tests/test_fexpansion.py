import math
from fractions import Fraction

import pytest

from icg2t import fexpansion
from icg2t.arith2adic import v2
from icg2t.corpus import expansion_corpus
from icg2t.errors import DomainError
from icg2t.generator import GeneratorParams, closed_form_traj

WORKED = GeneratorParams(g=3, a=1, b=2, c=0, t=8)


def test_worked_expansion():
    """t=8, g=3, s=4: kappa=1, F(n) = 1 + 80n, so u_4 = 175, u_8 = 95."""
    fe = fexpansion.build_F(WORKED, 4)
    assert fe.kappa == 1 and fe.tau_s == 4 and fe.w == 5
    assert fe.coeffs == [1, 80]
    assert fexpansion.f_value(fe, 0) == 1
    assert fexpansion.f_value(fe, 1) == 81
    traj = closed_form_traj(WORKED, 0, 9).values
    assert traj[4] == 175 and traj[8] == 95
    for n in range(10):
        assert fexpansion.congruence_check(fe, n)


def test_worked_phase_window():
    fe = fexpansion.build_F(WORKED, 4)
    poly = fexpansion.reduce_phases(fe, 1)
    alpha = poly.coefficients[0]
    assert alpha == Fraction(5, 16)
    assert 16 <= alpha.denominator <= 16  # 2^{t-s-omega} bounds, kappa! = 1


def test_kappa3_valuations():
    p = GeneratorParams(g=3, a=1, b=2, c=0, t=16)
    fe = fexpansion.build_F(p, 5)
    assert fe.kappa == 3
    # v2(3!/l!) for l = 1, 2, 3
    assert [fe.omegas[ell] for ell in (1, 2, 3)] == [1, 0, 0]


def test_valuations_on_corpus():
    for p, s in expansion_corpus(3, 12):
        fe = fexpansion.build_F(p, s)
        for ell, got, expected in fexpansion.coeff_valuations(fe):
            assert got == expected == v2(
                math.factorial(fe.kappa) // math.factorial(ell)
            )
        assert fe.omegas[fe.kappa] == 0


def test_coefficients_are_exact_integers():
    for p, s in expansion_corpus(4, 6):
        fe = fexpansion.build_F(p, s)
        fact = math.factorial(fe.kappa)
        for ell in range(1, fe.kappa + 1):
            # kappa! * a_l carries the full 2^{l s} factor
            assert fe.coeffs[ell] % (1 << (ell * fe.s)) == 0 or fe.coeffs[ell] == 0
        for n in range(4):
            total = sum(c * n**ell for ell, c in enumerate(fe.coeffs))
            assert total % fact == 0
            assert fexpansion.f_value(fe, n) == total // fact


def test_build_F_preconditions():
    with pytest.raises(DomainError):
        fexpansion.build_F(GeneratorParams(g=3, a=3, b=2, c=0, t=8), 4)
    with pytest.raises(DomainError):
        fexpansion.build_F(WORKED, 2)  # s <= beta


def test_reduce_phases_requires_odd_h():
    fe = fexpansion.build_F(WORKED, 4)
    with pytest.raises(DomainError):
        fexpansion.reduce_phases(fe, 2)
