import random

import pytest
from hypothesis import given, strategies as st

from schurfano.bwb import bwb, inversion_count
from schurfano.schur import weyl_dim_sl4, weyl_dim_sl6
from schurfano.verify import bubble_sort_distance, sym_factor_computed, sym_factor_expected
from schurfano.weights import Weight2, Weight4, Weight6, parse_weight6


def test_worked_example():
    res = bwb(parse_weight6("4,3,1,0|7,3"))
    assert (res.degree, res.weight, res.dim) == (4, (2, 2, 2, 0, 0, 0), 175)


def test_trivial_bundle():
    res = bwb(parse_weight6("0,0,0,0|0,0"))
    assert (res.degree, res.weight, res.dim) == (0, (0,) * 6, 1)


def test_repeated_entry_is_acyclic():
    # rho-shifted vector (5,4,3,2,2,1) repeats.
    assert bwb(parse_weight6("0,0,0,0|1,1")).acyclic
    assert bwb(parse_weight6("4,3,1,0|2,2")).to_dict()["outcome"] == "acyclic"


def test_quotient_and_dual_subbundle_have_sections():
    # H^0(Q) = V and H^0(U^dual) = V as well: both 6-dimensional.
    assert bwb(parse_weight6("1,0,0,0|0,0")).dim == 6
    assert bwb(parse_weight6("0,0,0,0|0,-1")).dim == 6


@given(st.lists(st.integers(-8, 8), min_size=6, max_size=6))
def test_degree_and_dimension_ranges(entries):
    q, u = sorted(entries[:4], reverse=True), sorted(entries[4:], reverse=True)
    res = bwb(Weight6(Weight4(q), Weight2(u)))
    if not res.acyclic:
        assert 0 <= res.degree <= 8
        assert res.weight[-1] == 0 and res.dim == weyl_dim_sl6(res.weight)


@given(st.lists(st.integers(-8, 8), min_size=6, max_size=6))
def test_serre_duality(entries):
    # Dualizing and tensoring with the canonical bundle reverses every
    # comparison between the two blocks of the rho-shifted vector.
    q, u = sorted(entries[:4], reverse=True), sorted(entries[4:], reverse=True)
    w = Weight6(Weight4(q), Weight2(u))
    w_dual = Weight6(Weight4([-x - 6 for x in reversed(q)]), Weight2([-x for x in reversed(u)]))
    a, b = bwb(w), bwb(w_dual)
    assert a.acyclic == b.acyclic
    if not a.acyclic:
        assert b.degree == 8 - a.degree and b.dim == a.dim


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6), st.integers(-3, 3))
def test_dominant_weights_have_only_sections(a, b, c, k):
    q = Weight4((a + b + c + k, b + c + k, c + k, k))
    res = bwb(Weight6(q, Weight2((k, k))))
    assert res.degree == 0
    assert res.dim == weyl_dim_sl6(tuple(q) + (k, k))
    assert res.dim >= weyl_dim_sl4(q)


@pytest.mark.parametrize("n", range(11))
def test_sym_factor_case_analysis(n):
    assert sym_factor_computed(n) == sym_factor_expected(n)


def test_inversions_against_bubble_sort():
    rng = random.Random(1)
    for _ in range(2000):
        v = rng.sample(range(-10, 11), 6)
        assert inversion_count(v) == bubble_sort_distance(v)
