"""Loaders for the printed tables shipped under ``schurfano/data``, and
expansion of the printed generator lists into multisets."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .schur import IrrepSum, end_decomposition, weyl_dim_sl4
from .weights import Weight2, Weight4, Weight6, is_dominant


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    """Parsed contents of ``data/<name>.json``."""
    text = resources.files("schurfano").joinpath("data").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def family_names() -> list[str]:
    return list(load("k_lists")["families"])


def family_member(name: str, m: int) -> Weight4:
    """Replace the leading ``m`` of a family name like "m,3,1,0"."""
    rest = [int(x) for x in name.split(",")[1:]]
    return Weight4([m] + rest)


def family_start(name: str) -> int:
    return load("k_lists")["families"][name]["start"]


def _mult_at(schedule: dict, m: int) -> int:
    """Multiplicity in force at ``m``: the value of the largest key <= m."""
    keys = [int(k) for k in schedule if int(k) <= m]
    return schedule[str(max(keys))] if keys else 0


def printed_k_list(name: str, m: int) -> IrrepSum:
    """The printed generator list of a family at ``m``, as canonical
    weights.  Non-dominant or negative members are empty and dropped."""
    fam = load("k_lists")["families"][name]
    terms: dict[Weight6, int] = {}
    for entry in fam["entries"]:
        n = _mult_at(entry["mult"], m)
        if n == 0:
            continue
        q = [b + o for b, o in zip((2 * m, m, m, 0), entry["offset"])]
        if not is_dominant(q) or q[3] < 0:
            continue
        w = Weight6(Weight4(q), Weight2((m, m))).canonical()
        terms[w] = terms.get(w, 0) + n
    return IrrepSum(terms)


def computed_k_list(name: str, m: int) -> IrrepSum:
    """What the recursion predicts for the family at ``m``: the whole End
    decomposition at the first member, the new factors afterwards."""
    from .koszul_ext import k_set

    if m == family_start(name):
        return end_decomposition(family_member(name, m))
    return k_set(family_member(name, m - 1))


def rank_sum_formula(name: str, m: int) -> Fraction:
    """Evaluate the printed closed form for the rank sum of a list."""
    expr = load("k_lists")["families"][name]["rank_sum"]
    # Only +, -, *, ** and / on integers and m; evaluated over Fractions.
    return eval(expr, {"__builtins__": {}}, {"m": Fraction(m)})


def rank_sum_printed(name: str, m: int) -> int:
    return sum(weyl_dim_sl4(w.q_part) * n for w, n in printed_k_list(name, m).items())


def rank_square_difference(name: str, m: int) -> int:
    cur = weyl_dim_sl4(family_member(name, m)) ** 2
    prev_entries = [m - 1] + [int(x) for x in name.split(",")[1:]]
    prev = weyl_dim_sl4(Weight4(prev_entries)) ** 2 if is_dominant(prev_entries) else 0
    return cur - prev
