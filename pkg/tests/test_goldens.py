"""Printed generator lists and rank sums against the computed sets.

Where a printed list disagrees with the computation the disagreement is
pinned down exactly, and each one is backed by a second, independent
reason to believe the computed value: a rank-sum identity, a decomposition
printed elsewhere, or both.
"""

import pytest

from schurfano import goldens
from schurfano.schur import IrrepSum, end_decomposition, weyl_dim_sl4
from schurfano.verify import k_list_mismatches
from schurfano.weights import Weight4, parse_weight6

FAMILIES = goldens.family_names()

# (family, m) -> {presented weight: (printed, computed)}
MISPRINTS = {
    ("m,2,1,0", 2): {"3,3,2,0|2,2": (2, 1), "4,2,1,1|2,2": (2, 1)},
    ("m,2,2,0", 2): {"3,3,2,0|2,2": (1, 0), "4,2,1,1|2,2": (1, 0)},
    **{("m,3,0,0", m): {f"{2 * m - 1},{m + 2},{m - 2},1|{m},{m}": (0, 1)} for m in range(3, 9)},
    ("m,3,2,0", 4): {"6,6,2,2|4,4": (2, 1)},
}


def test_families_present():
    assert len(FAMILIES) == 9


@pytest.mark.parametrize("name", FAMILIES)
def test_rank_sum_formula_is_difference_of_squares(name):
    for m in range(goldens.family_start(name), 13):
        assert goldens.rank_sum_formula(name, m) == goldens.rank_square_difference(name, m)


@pytest.mark.parametrize("name", FAMILIES)
def test_computed_lists_satisfy_rank_sums(name):
    for m in range(goldens.family_start(name), 9):
        got = goldens.computed_k_list(name, m).total_dim(lambda w: weyl_dim_sl4(w.q_part))
        assert got == goldens.rank_sum_formula(name, m)


def test_printed_lists_match_except_misprints():
    found = {(name, m): diff for name, m, diff in k_list_mismatches(8)}
    assert found == MISPRINTS


@pytest.mark.parametrize("key", sorted(MISPRINTS))
def test_misprinted_lists_break_their_rank_sum(key):
    name, m = key
    assert goldens.rank_sum_printed(name, m) != goldens.rank_sum_formula(name, m)


def test_misprinted_rank_sums():
    assert goldens.rank_sum_printed("m,2,1,0", 2) == 490
    assert goldens.rank_sum_printed("m,2,2,0", 2) == 190
    assert goldens.rank_sum_printed("m,3,0,0", 4) + weyl_dim_sl4(Weight4((7, 6, 2, 1))) == 17100
    assert goldens.rank_sum_printed("m,3,2,0", 4) == 17680
    assert goldens.rank_sum_formula("m,3,2,0", 4) == 17575


def _printed_end(key):
    rows = goldens.load("end_examples")["decompositions"][key]
    return IrrepSum((parse_weight6(w).canonical(), n) for w, n in rows)


def test_first_member_lists_contradict_printed_end():
    # The first list of a family is the whole End of its first member.
    # (2,2,1,0) is dual to (2,1,0,0) and (2,2,2,0) is dual to (2,0,0,0) up
    # to twist, and the decompositions printed for those agree with the
    # computation, not with the lists.
    assert end_decomposition(Weight4((2, 2, 1, 0))) == _printed_end("2,1,0,0")
    assert end_decomposition(Weight4((2, 2, 2, 0))) == _printed_end("2,2,2,0")
    assert len(_printed_end("2,2,2,0")) == 3
    assert goldens.printed_k_list("m,2,1,0", 2) != _printed_end("2,1,0,0")


def test_mult_schedule():
    assert goldens._mult_at({"1": 1, "3": 2}, 0) == 0
    assert goldens._mult_at({"1": 1, "3": 2}, 2) == 1
    assert goldens._mult_at({"1": 1, "3": 2}, 7) == 2


def test_family_member():
    assert goldens.family_member("m,3,1,0", 5) == Weight4((5, 3, 1, 0))
    assert goldens.family_start("m,3,1,0") == 3
