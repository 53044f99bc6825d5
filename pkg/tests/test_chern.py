from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from schurfano.cohring import C1SQ, CH2, ONE, c2X, ch_Q, dualize_ch, euler_pairing, exp_c1, mul
from schurfano.chern import (
    c2X_multiple, ch_schur_U, ch_schur_closed, ch_schur_oracle, ch_sym_dragutin, chi_end,
    delta_general, delta_of, delta_sigma_U, discriminant, ell_of, lambda_polys, mixed_modular,
    rank_of, stirling2, tau_of, xi_invariant, xi_of,
)
from schurfano.schur import littlewood_richardson, pieri, weyl_dim_sl4
from schurfano.verify import partitions as all_partitions
from schurfano.weights import Weight2, Weight4, dual_normalized


def _sum_ch(decomp):
    out = ONE.scale(0)
    for nu, n in decomp.items():
        out = out + ch_schur_closed(nu).scale(n)
    return out


def test_quotient_bundle():
    assert ch_schur_closed(Weight4((1, 0, 0, 0))) == ch_Q()
    assert ch_schur_closed(Weight4((0, 0, 0, 0))) == ONE


def test_worked_example_2100():
    lam = Weight4((2, 1, 0, 0))
    assert str(ch_schur_closed(lam)) == "20*1 + 15*c1 + 4*c1^2 + 13*ch2 + 15*ch3 + -23*ch4"
    assert delta_general(lam) == F(13, 20)
    assert c2X_multiple(discriminant(ch_schur_closed(lam))) == 65
    assert chi_end(lam) == 363


def test_anchor_3210():
    assert chi_end(Weight4((3, 2, 1, 0))) == 35328


def test_oracle_small_sweep():
    for lam in all_partitions(4):
        assert ch_schur_closed(lam) == ch_schur_oracle(lam), lam


@pytest.mark.parametrize("m", range(8))
def test_symmetric_powers_three_ways(m):
    lam = Weight4((m, 0, 0, 0))
    assert ch_schur_closed(lam) == ch_schur_oracle(lam) == ch_sym_dragutin(m)


@given(partitions(5))
def test_pieri_additivity(lam):
    assert mul(ch_schur_closed(lam), ch_Q()) == _sum_ch(pieri(lam, 1))


@given(partitions(3), partitions(2))
def test_lr_multiplicativity(lam, mu):
    lhs = mul(ch_schur_closed(lam), ch_schur_closed(mu))
    assert lhs == _sum_ch(littlewood_richardson(lam, mu))


@given(partitions(6), st.integers(-3, 3))
def test_twist(lam, k):
    if lam[3] + k < 0:
        return
    assert ch_schur_closed(lam.shift(k)) == mul(ch_schur_closed(lam), exp_c1(k))


@given(partitions(6))
def test_duality(lam):
    dual, twist = dual_normalized(lam)
    assert dualize_ch(ch_schur_closed(lam)) == mul(ch_schur_closed(dual), exp_c1(twist))


@given(partitions(8))
def test_delta_forms_agree(lam):
    assert delta_general(lam) == lambda_polys(lam).delta


@given(partitions(6))
def test_discriminants_are_twist_invariant(lam):
    ch, ch_twisted = ch_schur_closed(lam), ch_schur_closed(lam.shift(2))
    assert discriminant(ch) == discriminant(ch_twisted)
    assert xi_invariant(ch) == xi_invariant(ch_twisted)


@given(partitions(6))
def test_rank_and_chi(lam):
    pol = lambda_polys(lam)
    assert pol.r == weyl_dim_sl4(lam) == ch_schur_closed(lam).a0
    ch = ch_schur_closed(lam)
    assert chi_end(lam) == euler_pairing(ch, ch) == 3 * pol.P * pol.r**2


def test_stirling():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert stirling2(0, 0) == 1


def test_subbundle_and_quotient_add_up_to_trivial():
    assert ch_schur_U(Weight2((1, 0))) + ch_Q() == ONE.scale(6)
    for m in range(5):
        assert ch_schur_U(Weight2((m, 0))).a0 == m + 1


def test_delta_u():
    k, delta = delta_sigma_U(Weight2((1, 0)))
    assert k == 1
    assert delta == discriminant(ch_schur_U(Weight2((1, 0))))
    for mu in [(2, 0), (2, 1), (3, 1), (2, 2)]:
        k, delta = delta_sigma_U(Weight2(mu))
        assert delta == discriminant(ch_schur_U(Weight2(mu)))


def test_mixed_example():
    ok, delta = mixed_modular(Weight4((1, 0, 0, 0)), Weight2((1, 1)))
    assert ok and delta == c2X()
    ok, delta = mixed_modular(Weight4((1, 0, 0, 0)), Weight2((1, 0)))
    assert not ok and delta == C1SQ.scale(20) + CH2.scale(32)


# --- polynomial identities behind the inductive computation of ch -----------
#
# Coefficients of ch(Sigma_(m,t,s,0) Q) along c1^2, ch2, ch3, ch4 (rank
# included).  Summing them over a Pieri decomposition must reproduce the
# coefficients of the tensor product written as polynomials.

def _c1sq(x):
    return F(1, 2) * (ell_of(*x) ** 2 - delta_of(*x) / 4) * rank_of(*x)


def _ch2(x):
    return delta_of(*x) * rank_of(*x)


def _ch3(x):
    return tau_of(*x) * ell_of(*x) * rank_of(*x)


def _ch4(x):
    return xi_of(*x) * rank_of(*x)


GRID = [(m, t) for m in range(13) for t in range(m + 1)]


@pytest.mark.parametrize("m,t", GRID)
def test_sym_products(m, t):
    terms = [(m + t - i, i, 0) for i in range(t + 1)]
    rr = rank_of(m, 0, 0) * rank_of(t, 0, 0)
    assert sum(map(_c1sq, terms)) == F(1, 8) * (F(t * (t - 1), 5) + F(m * t, 2) + F(m * (m - 1), 5)) * rr
    assert sum(map(_ch2, terms)) == F(t * (t + 4) + m * (m + 4), 20) * rr
    assert sum(map(_ch3, terms)) == F(2 * t * t + 2 * m * m - m * t * (m + t - 4), 8) * rr
    assert sum(map(_ch4, terms)) == F(5 * m * (7 * m - 2) + 5 * t * (7 * t - 2)
                                      + 3 * m * t * (3 * m * t - 13 * m - 13 * t + 23), 100) * rr


def _tensor_q(x):
    """Coefficients of ch(Sigma_x Q (x) Q) along c1^2, ch2, ch3, ch4."""
    l, tau, d, xi, r = ell_of(*x), tau_of(*x), delta_of(*x), xi_of(*x), rank_of(*x)
    return (
        (2 * l * l + l - d / 2) * r,
        (4 * d + 1) * r,
        (1 + 2 * l * (1 - 4 * l) + tau * (1 + 4 * l)) * r,
        (1 + 6 * l * (F(4, 5) * l - 1) + 3 * tau * (F(9, 10) - 2 * l) + 4 * xi) * r,
    )


@pytest.mark.parametrize("m,t", GRID)
def test_tensor_with_q_first_row(m, t):
    x = (m, t, 0)
    terms = [(m + 1, t, 0), (m, t + 1, 0), (m, t, 1)]
    got = tuple(sum(f(y) for y in terms) for f in (_c1sq, _ch2, _ch3, _ch4))
    assert got == _tensor_q(x)


def _last_box_term(m, t, s):
    """Coefficients of ch(Sigma_(m,t,s,1) Q), via (m-1, t-1, s-1) and O(1)."""
    y = (m - 1, t - 1, s - 1)
    l, tau, d, xi, r1 = ell_of(*y), tau_of(*y), delta_of(*y), xi_of(*y), rank_of(*y)
    return (
        F(1, 2) * (l * l + 2 * l - d / 4 + 1) * r1,
        d * r1,
        -(12 * l * l + 12 * l - l * tau - 5 * d + 4) * r1,
        (6 + 6 * l * (4 - tau) + 36 * l * l - 15 * d + xi) * r1,
    )


@pytest.mark.parametrize("m,t,s", [(m, t, s) for m in range(1, 10) for t in range(1, m + 1) for s in range(1, t + 1)])
def test_tensor_with_q_general(m, t, s):
    terms = [(m + 1, t, s), (m, t + 1, s), (m, t, s + 1)]
    last = _last_box_term(m, t, s)
    got = tuple(sum(f(y) for y in terms) + last[i] for i, f in enumerate((_c1sq, _ch2, _ch3, _ch4)))
    assert got == _tensor_q((m, t, s))
