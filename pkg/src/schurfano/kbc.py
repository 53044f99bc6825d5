"""Growth of End decompositions along the a-direction: the cardinalities
k_{b,c}, their stabilization and symmetry, and the interpolating
polynomial f(b, c)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .koszul_ext import k_set
from .weights import Weight4


def lambda_from_abc(a: int, b: int, c: int) -> Weight4:
    """a d1 + b d2 + c d3 in fundamental-weight coordinates."""
    if min(a, b, c) < 0:
        raise ValueError("a, b, c must be non-negative")
    return Weight4((a + b + c, b + c, c, 0))


def k_cardinality(b: int, c: int, a: int) -> int:
    """Number of new End factors, counted with multiplicity, when passing
    from lambda_from_abc(a, b, c) to the next member of the sequence."""
    return k_set(lambda_from_abc(a, b, c)).total_multiplicity()


@dataclass(frozen=True)
class KbcRecord:
    b: int
    c: int
    a_values: tuple      # ((a, cardinality), ...)
    threshold: int
    stabilized: bool
    k: int | None
    f_value: int

    @property
    def matches_f(self) -> bool:
        return self.stabilized and self.k == self.f_value

    def to_json(self) -> dict:
        return {
            "b": self.b,
            "c": self.c,
            "a_values": [list(x) for x in self.a_values],
            "threshold": self.threshold,
            "stabilized": self.stabilized,
            "k": self.k,
            "f_value": self.f_value,
        }


def verify_stabilization(b: int, c: int, a_max: int) -> KbcRecord:
    """Cardinalities for 0 <= a <= a_max; stabilized when they are constant
    from a = max(b + c - 1, 0) on."""
    threshold = max(b + c - 1, 0)
    if a_max < threshold:
        raise ValueError(f"a_max must be at least {threshold}")
    values = tuple((a, k_cardinality(b, c, a)) for a in range(a_max + 1))
    tail = {n for a, n in values if a >= threshold}
    stable = len(tail) == 1
    return KbcRecord(b, c, values, threshold, stable, tail.pop() if stable else None, f_poly(b, c))


def f_poly(b: int, c: int) -> int:
    """Degree-5 polynomial interpolating k_{b,c}; symmetric by swapping so
    that b >= c.  A non-integral value signals a transcription error."""
    if b < c:
        b, c = c, b
    b, c = Fraction(b), Fraction(c)
    val = ((60 + 134 * c + 90 * c**2 + 15 * c**3 + c**5) / 60
           + (26 + 62 * c + 45 * c**2 + 8 * c**3 - c**4) * b / 12
           + (3 + 7 * c + 5 * c**2 + c**3) * b**2 / 2
           + (c + 1) ** 2 * b**3 / 3)
    if val.denominator != 1:
        raise ArithmeticError(f"f({b}, {c}) = {val} is not an integer")
    return int(val)
