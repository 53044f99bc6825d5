"""The algebraic cohomology subring generated by the Chern classes of Q
on a very general Fano variety of lines of a cubic fourfold.

Basis: 1, c1, c1^2, ch2, ch3, ch4 (complex degrees 0, 1, 2, 2, 3, 4).
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterator, Union

Scalar = Union[int, Fraction]

_DEGREES = (0, 1, 2, 2, 3, 4)

# Products of basis elements landing in degree 3 and 4.
_RELATIONS = {
    "c1^3": ("a4", Fraction(-24)),
    "c1*ch2": ("a4", Fraction(2)),
    "c1^4": ("a5", Fraction(144)),
    "c1*ch3": ("a5", Fraction(-6)),
    "c1^2*ch2": ("a5", Fraction(-12)),
    "ch2^2": ("a5", Fraction(12)),
}

INTEGRAL_CH4 = Fraction(3, 4)


@contextmanager
def relations_override(values: dict[str, Scalar]) -> Iterator[None]:
    """Temporarily replace relation constants, e.g. ``{"c1^3": -23}``.

    Only meant for mutation smoke tests of the verification harness.
    """
    saved = dict(_RELATIONS)
    try:
        for name, v in values.items():
            if name not in _RELATIONS:
                raise KeyError(f"unknown relation {name!r}")
            _RELATIONS[name] = (_RELATIONS[name][0], Fraction(v))
        yield
    finally:
        _RELATIONS.clear()
        _RELATIONS.update(saved)


@dataclass(frozen=True)
class CohClass:
    a0: Fraction = Fraction(0)
    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a3: Fraction = Fraction(0)
    a4: Fraction = Fraction(0)
    a5: Fraction = Fraction(0)

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, Fraction(getattr(self, f.name)))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return (self.a0, self.a1, self.a2, self.a3, self.a4, self.a5)

    @classmethod
    def from_coeffs(cls, cs) -> "CohClass":
        return cls(*cs)

    def __add__(self, other: "CohClass") -> "CohClass":
        return CohClass(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CohClass") -> "CohClass":
        return CohClass(*(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CohClass":
        return CohClass(*(-a for a in self.coeffs))

    def scale(self, k: Scalar) -> "CohClass":
        return CohClass(*(k * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, CohClass):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, k: Scalar) -> "CohClass":
        return self.scale(k)

    def __pow__(self, n: int) -> "CohClass":
        out = ONE
        for _ in range(n):
            out = mul(out, self)
        return out

    def part(self, degree: int) -> "CohClass":
        """Homogeneous component of the given complex degree."""
        return CohClass(*(a if d == degree else 0 for a, d in zip(self.coeffs, _DEGREES)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> dict:
        return {f"a{i}": _frac_str(a) for i, a in enumerate(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "CohClass":
        return cls(*(Fraction(data[f"a{i}"]) for i in range(6)))

    def __str__(self) -> str:
        names = ("1", "c1", "c1^2", "ch2", "ch3", "ch4")
        terms = [f"{a}*{n}" for a, n in zip(self.coeffs, names) if a]
        return " + ".join(terms) if terms else "0"


def _frac_str(a: Fraction) -> str:
    return f"{a.numerator}/{a.denominator}"


ONE = CohClass(1)
C1 = CohClass(a1=1)
C1SQ = CohClass(a2=1)
CH2 = CohClass(a3=1)
CH3 = CohClass(a4=1)
CH4 = CohClass(a5=1)


def mul(x: CohClass, y: CohClass) -> CohClass:
    """Graded product, reduced to the basis; degree > 4 is dropped."""
    a0, a1, a2, a3, a4, a5 = x.coeffs
    b0, b1, b2, b3, b4, b5 = y.coeffs
    r = _RELATIONS
    out = {
        "a0": a0 * b0,
        "a1": a0 * b1 + a1 * b0,
        "a2": a0 * b2 + a2 * b0 + a1 * b1,
        "a3": a0 * b3 + a3 * b0,
        "a4": a0 * b4 + a4 * b0,
        "a5": a0 * b5 + a5 * b0,
    }
    cubic = {
        "c1^3": a1 * b2 + a2 * b1,
        "c1*ch2": a1 * b3 + a3 * b1,
    }
    quartic = {
        "c1^4": a2 * b2,
        "c1*ch3": a1 * b4 + a4 * b1,
        "c1^2*ch2": a2 * b3 + a3 * b2,
        "ch2^2": a3 * b3,
    }
    for name, coeff in list(cubic.items()) + list(quartic.items()):
        slot, k = r[name]
        out[slot] += k * coeff
    return CohClass(**out)


def integrate(x: CohClass) -> Fraction:
    return INTEGRAL_CH4 * x.a5


def c2X() -> CohClass:
    """Second Chern class of X, equal to the discriminant of Q."""
    return C1SQ - 8 * CH2


def point() -> CohClass:
    return Fraction(4, 3) * CH4


def tdX() -> CohClass:
    return ONE + Fraction(1, 12) * c2X() + 3 * point()


def sqrt_tdX() -> CohClass:
    return ONE + Fraction(1, 24) * c2X() + Fraction(25, 32) * point()


def dualize_ch(ch: CohClass) -> CohClass:
    a0, a1, a2, a3, a4, a5 = ch.coeffs
    return CohClass(a0, -a1, a2, a3, -a4, a5)


def mukai_vector(ch: CohClass) -> CohClass:
    return mul(ch, sqrt_tdX())


def euler_pairing(chE: CohClass, chF: CohClass) -> Fraction:
    """chi(E, F) by Hirzebruch-Riemann-Roch."""
    return integrate(mul(mul(dualize_ch(chE), chF), tdX()))


def exp_c1(k: Scalar) -> CohClass:
    """Chern character of the k-th power of the Pluecker line bundle."""
    out, term = ONE, ONE
    for n in range(1, 5):
        term = mul(term, C1).scale(Fraction(k, n))
        out = out + term
    return out


def ch_Q() -> CohClass:
    return CohClass(4, 1, 0, 1, 1, 1)
