"""Dominant weights for SL(4), SL(2) and pairs of them on Gr(2,6)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class WeightError(ValueError):
    """Raised for malformed or non-dominant weights."""


def is_dominant(w: Sequence[int]) -> bool:
    """True iff ``w`` is non-increasing.  Only lengths 2, 4 and 6 are accepted."""
    if len(w) not in (2, 4, 6):
        raise WeightError(f"invalid weight length {len(w)}; expected 2, 4 or 6")
    return all(a >= b for a, b in zip(w, w[1:]))


class _Weight(tuple):
    _length = 0

    def __new__(cls, entries: Iterable[int]):
        values = tuple(int(x) for x in entries)
        if len(values) != cls._length:
            raise WeightError(
                f"{cls.__name__} needs {cls._length} entries, got {len(values)}"
            )
        if not is_dominant(values):
            raise WeightError(f"{cls.__name__} {values} is not dominant")
        return super().__new__(cls, values)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(str(x) for x in self)

    def shift(self, n: int):
        return type(self)(x + n for x in self)


class Weight4(_Weight):
    """Highest weight (l1, l2, l3, l4) of an SL(4) representation."""

    _length = 4

    @property
    def is_partition(self) -> bool:
        return self[3] >= 0

    @property
    def size(self) -> int:
        return sum(self)


class Weight2(_Weight):
    """Highest weight (m1, m2) of an SL(2) representation."""

    _length = 2


DELTA1 = Weight4((1, 0, 0, 0))


@dataclass(frozen=True, order=True)
class Weight6:
    """Index of the irreducible homogeneous bundle with SL(4) part
    ``q_part`` (on the quotient bundle) and SL(2) part ``u_part``
    (on the tautological subbundle)."""

    q_part: Weight4
    u_part: Weight2

    def __post_init__(self):
        if not isinstance(self.q_part, Weight4):
            object.__setattr__(self, "q_part", Weight4(self.q_part))
        if not isinstance(self.u_part, Weight2):
            object.__setattr__(self, "u_part", Weight2(self.u_part))

    @classmethod
    def of(cls, entries: Sequence[int]) -> "Weight6":
        if len(entries) != 6:
            raise WeightError(f"Weight6 needs 6 entries, got {len(entries)}")
        return cls(Weight4(entries[:4]), Weight2(entries[4:]))

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(self.q_part) + tuple(self.u_part)

    def shift(self, n: int) -> "Weight6":
        return Weight6(self.q_part.shift(n), self.u_part.shift(n))

    def canonical(self) -> "Weight6":
        """Representative with last entry 0; both parts move together."""
        return self.shift(-self.u_part[1])

    def __str__(self) -> str:
        return f"{self.q_part}|{self.u_part}"


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise WeightError(f"cannot parse weight {text!r}") from exc


def parse_partition(text: str) -> Weight4:
    """Parse ``"a,b,c,d"`` into a partition (dominant, last entry >= 0)."""
    w = Weight4(_ints(text.strip()))
    if not w.is_partition:
        raise WeightError(f"{text!r} has a negative last entry")
    return w


def parse_weight2(text: str) -> Weight2:
    return Weight2(_ints(text.strip()))


def parse_weight6(text: str) -> Weight6:
    """Parse ``"a,b,c,d|e,f"``."""
    parts = text.strip().split("|")
    if len(parts) != 2:
        raise WeightError(f"expected 'a,b,c,d|e,f', got {text!r}")
    return Weight6(Weight4(_ints(parts[0])), Weight2(_ints(parts[1])))


def _require_partition(lam: Weight4) -> Weight4:
    lam = lam if isinstance(lam, Weight4) else Weight4(lam)
    if not lam.is_partition:
        raise WeightError(f"{lam} is not a partition")
    return lam


def dual_normalized(lam: Weight4) -> tuple[Weight4, int]:
    """Partition of the dual up to a line-bundle twist.

    Returns ``(l', -l1)`` with ``l' = (l1-l4, l1-l3, l1-l2, 0)``.
    """
    lam = _require_partition(lam)
    l1, l2, l3, l4 = lam
    return Weight4((l1 - l4, l1 - l3, l1 - l2, 0)), -l1


def reduce(lam: Weight4) -> tuple[Weight4, int]:
    """Strip the determinant part: returns ``(lam - l4, l4)``."""
    lam = _require_partition(lam)
    t = lam[3]
    return lam.shift(-t), t


def end_weight(lam: Weight4) -> tuple[Weight4, Weight4, int]:
    """The endomorphism bundle is the tensor product of the first two
    Schur functors, twisted by the third entry."""
    dual, twist = dual_normalized(lam)
    return dual, lam, twist


def end_class(lam: Weight4) -> Weight4:
    """Reduced representative shared by a partition, its twists and its dual.

    All of these have isomorphic endomorphism bundles.
    """
    r, _ = reduce(lam)
    d, _ = dual_normalized(r)
    return max(r, d)
