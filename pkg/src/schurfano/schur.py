"""Weyl dimensions, Pieri and Littlewood-Richardson rules, and the
irreducible decomposition of endomorphism bundles."""

from __future__ import annotations

from functools import lru_cache
from math import prod
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .weights import (
    Weight2,
    Weight4,
    Weight6,
    WeightError,
    end_weight,
    parse_partition,
    parse_weight6,
    reduce,
)

Key = Union[Weight4, Weight6]


def weyl_dim_sl4(lam: Weight4) -> int:
    """Dimension of the SL(4) irrep with highest weight ``lam``."""
    lam = lam if isinstance(lam, Weight4) else Weight4(lam)
    m, t, s, _ = lam.shift(-lam[3])
    num = (m + 3) * (t + 2) * (s + 1) * (m - t + 1) * (m - s + 2) * (t - s + 1)
    return num // 12


def weyl_dim_sl2(mu: Weight2) -> int:
    mu = mu if isinstance(mu, Weight2) else Weight2(mu)
    return mu[0] - mu[1] + 1


def weyl_dim_sl6(nu: Sequence[int]) -> int:
    """Weyl dimension formula for SL(6)."""
    nu = tuple(nu)
    if len(nu) != 6 or any(a < b for a, b in zip(nu, nu[1:])):
        raise WeightError(f"{nu} is not a dominant SL(6) weight")
    num = prod(nu[i] - nu[j] + j - i for i in range(6) for j in range(i + 1, 6))
    den = prod(j - i for i in range(6) for j in range(i + 1, 6))
    return num // den


def rank(key: Key) -> int:
    """Rank of the associated bundle: dim of the SL(4) x SL(2) irrep."""
    if isinstance(key, Weight6):
        return weyl_dim_sl4(key.q_part) * weyl_dim_sl2(key.u_part)
    return weyl_dim_sl4(key)


class IrrepSum(Mapping):
    """Multiset of weights with positive multiplicities.

    Keys are ``Weight4`` or canonical ``Weight6``; iteration is in
    decreasing lexicographic order so output is deterministic.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, int] | Iterable[tuple[Key, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, int] = {}
        for k, n in items:
            if n < 0:
                raise ValueError(f"negative multiplicity for {k}")
            if n:
                acc[k] = acc.get(k, 0) + n
        self._terms = dict(sorted(acc.items(), key=lambda kv: _sort_key(kv[0]), reverse=True))

    def __getitem__(self, key: Key) -> int:
        return self._terms.get(key, 0)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __iter__(self) -> Iterator[Key]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, IrrepSum):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {n}" if n > 1 else str(k) for k, n in self._terms.items())
        return f"IrrepSum({{{body}}})"

    def __add__(self, other: "IrrepSum") -> "IrrepSum":
        return IrrepSum(list(self.items()) + list(other.items()))

    def difference(self, other: "IrrepSum") -> "IrrepSum":
        """Multiset difference; raises ``ValueError`` if ``other`` is not contained."""
        out = dict(self._terms)
        for k, n in other.items():
            left = out.get(k, 0) - n
            if left < 0:
                raise ValueError(f"{k} occurs {n} times but only {out.get(k, 0)} available")
            out[k] = left
        return IrrepSum(out)

    def total_multiplicity(self) -> int:
        return sum(self._terms.values())

    def total_dim(self, dim: Callable[[Key], int] = rank) -> int:
        return sum(n * dim(k) for k, n in self._terms.items())

    def to_records(self) -> list[dict]:
        return [{"weight": str(k), "mult": n, "dim": rank(k)} for k, n in self._terms.items()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "IrrepSum":
        out = []
        for rec in records:
            text = rec["weight"]
            key = parse_weight6(text) if "|" in text else parse_partition(text)
            out.append((key, int(rec["mult"])))
        return cls(out)


def _sort_key(k: Key):
    return k.entries if isinstance(k, Weight6) else tuple(k)


def pieri(lam: Weight4, m: int) -> IrrepSum:
    """Decompose ``Sigma_lam (x) Sym^m`` for GL(4)."""
    lam = Weight4(lam)
    if m < 0:
        raise ValueError("m must be non-negative")
    return IrrepSum((Weight4(nu), 1) for nu in _horizontal_strips(tuple(lam), m))


def _horizontal_strips(shape: tuple[int, ...], m: int) -> Iterator[tuple[int, ...]]:
    # Row i may grow up to the old length of row i-1; row 0 is unbounded.
    def rec(i: int, left: int, acc: tuple[int, ...]):
        if i == 4:
            if left == 0:
                yield acc
            return
        cap = left if i == 0 else min(left, shape[i - 1] - shape[i])
        for add in range(cap, -1, -1):
            yield from rec(i + 1, left - add, acc + (shape[i] + add,))

    yield from rec(0, m, ())


def littlewood_richardson(lam: Weight4, mu: Weight4) -> IrrepSum:
    """Decompose ``Sigma_lam (x) Sigma_mu`` for GL(4) (partitions only).

    The boxes of ``mu`` are added to ``lam`` row by row, row ``k`` of
    ``mu`` contributing boxes labelled ``k`` along a horizontal strip.
    A filling is admissible when the labels read right to left, top to
    bottom form a lattice word.  Each admissible filling contributes one
    to the multiplicity of its final shape.
    """
    lam, mu = Weight4(lam), Weight4(mu)
    if not (lam.is_partition and mu.is_partition):
        raise WeightError("Littlewood-Richardson needs partitions")
    return IrrepSum(_lr(tuple(lam), tuple(mu)))


@lru_cache(maxsize=None)
def _lr(lam: tuple[int, ...], mu: tuple[int, ...]) -> tuple[tuple[Weight4, int], ...]:
    # states: (shape, row counts of the last label placed) -> number of fillings
    states: dict[tuple, int] = {(lam, (0, 0, 0, 0)): 1}
    for k, boxes in enumerate(mu):
        if boxes == 0:
            break
        nxt: dict[tuple, int] = {}
        for (shape, prev), count in states.items():
            for new_shape, rows in _label_strips(shape, prev, boxes, first=(k == 0)):
                key = (new_shape, rows)
                nxt[key] = nxt.get(key, 0) + count
        states = nxt
    out: dict[Weight4, int] = {}
    for (shape, _), count in states.items():
        w = Weight4(shape)
        out[w] = out.get(w, 0) + count
    return tuple(out.items())


def _label_strips(shape, prev, boxes, first):
    # Lattice condition for the new label k+1 against the previous label k:
    # boxes of label k+1 in rows <= i never exceed boxes of label k in rows < i.
    def rec(i, left, acc_shape, acc_rows, placed):
        if i == 4:
            if left == 0:
                yield acc_shape, acc_rows
            return
        cap = left if i == 0 else min(left, shape[i - 1] - shape[i])
        if not first:
            cap = min(cap, sum(prev[:i]) - placed)
        for add in range(cap, -1, -1):
            yield from rec(
                i + 1,
                left - add,
                acc_shape + (shape[i] + add,),
                acc_rows + (add,),
                placed + add,
            )

    yield from rec(0, boxes, (), (), 0)


def end_decomposition(lam: Weight4) -> IrrepSum:
    """Irreducible summands of the endomorphism bundle, as canonical
    ``Weight6`` keys."""
    dual, lam, twist = end_weight(Weight4(lam))
    u = Weight2((-twist, -twist))
    return IrrepSum(
        (Weight6(nu, u).canonical(), n) for nu, n in littlewood_richardson(dual, lam).items()
    )


def present(w: Weight6, level: int) -> Weight6:
    """Shift a canonical weight so that its SL(2) part is ``(level, level)``
    for weights with equal SL(2) entries (the endomorphism presentation)."""
    return w.shift(level - w.u_part[1])


def reduced_level(lam: Weight4) -> int:
    """First entry of the reduced partition; the SL(2) level of the
    endomorphism presentation."""
    return reduce(Weight4(lam))[0][0]
