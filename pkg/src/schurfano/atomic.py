"""Atomicity of Schur functors of Q: the combinatorial criterion, the
numeric obstruction, and extended Mukai vectors for the atomic cases."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cohring
from .chern import lambda_polys
from .cohring import C1, CH3, CohClass, mul
from .schur import weyl_dim_sl4
from .weights import Weight4, WeightError, dual_normalized, reduce

# Beauville-Bogomolov square of c1(Q).  The extended square of
# (r, l c1, s) is q(l c1) - 2 r s = Q_C1 l^2 - 2 r s.  For Sym^m Q the
# square is known to be (3m^2 + 12m - 20) r^2 / 8; with l = m r / 4 and
# s = -(3m - 5) r / 4 this leaves Q_C1 = 6 as the only solution.
Q_C1 = 6

# l_dual is the degree-6 class with  integral(l_dual * eta) = q(l, eta).
# Against eta = c1: q(c1, c1) = 6 and integral(ch3 * c1) = -9/2, so
# c1_dual = (6 / (-9/2)) ch3 = -(4/3) ch3.
C1_DUAL = CH3.scale(Fraction(-4, 3))


@dataclass(frozen=True)
class ExtendedMukaiVector:
    """Normalized extended Mukai vector (r, l c1(Q), s)."""

    r: int
    l_coef: Fraction
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "l_coef", Fraction(self.l_coef))
        object.__setattr__(self, "s", Fraction(self.s))

    def twist(self, k: int) -> "ExtendedMukaiVector":
        """Action of exp(k c1): the vector of F (x) O(k)."""
        r, l, s = self.r, self.l_coef, self.s
        return ExtendedMukaiVector(r, l + r * k, s + Q_C1 * l * k + Fraction(Q_C1, 2) * r * k * k)

    def dual(self) -> "ExtendedMukaiVector":
        return ExtendedMukaiVector(self.r, -self.l_coef, self.s)

    def to_json(self) -> dict:
        return {"r": self.r, "l": _fs(self.l_coef), "s": _fs(self.s)}


def _fs(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def is_atomic(lam: Weight4) -> bool:
    l1, l2, l3, l4 = lam
    return (l1 == l2 == l3) or (l2 == l3 == l4)


def atomic_numeric_test(lam: Weight4) -> Fraction:
    """(3 delta - 1)^2 - P; vanishes exactly in the atomic cases."""
    pol = lambda_polys(lam)
    return (3 * pol.delta - 1) ** 2 - pol.P


def extended_mukai_sym(m: int) -> ExtendedMukaiVector:
    if m < 0:
        raise ValueError("m must be non-negative")
    r = weyl_dim_sl4(Weight4((m, 0, 0, 0)))
    return ExtendedMukaiVector(r, Fraction(m * r, 4), Fraction(-(3 * m - 5) * r, 4))


def extended_mukai(lam: Weight4) -> ExtendedMukaiVector:
    """Extended Mukai vector of an atomic Schur functor.

    Both atomic shapes are symmetric powers up to twist and duality:
    (m+k, k, k, k) is Sym^m Q (x) O(k), and (a+k, a+k, a+k, k) is the dual
    of Sym^a Q twisted by O(a + k).
    """
    lam = Weight4(lam)
    if not is_atomic(lam):
        raise WeightError(f"{lam} is not atomic; no extended Mukai vector")
    red, k = reduce(lam)
    if red[1] == 0:
        return extended_mukai_sym(red[0]).twist(k)
    sym, t = dual_normalized(red)
    return extended_mukai_sym(sym[0]).dual().twist(k - t)


def q_tilde(v: ExtendedMukaiVector) -> Fraction:
    return Q_C1 * v.l_coef**2 - 2 * v.r * v.s


def T_squared(v: ExtendedMukaiVector) -> CohClass:
    """Image of the second symmetric power of v in the cohomology ring,
    divided by r."""
    if v.r == 0:
        raise ZeroDivisionError("T_squared needs nonzero rank")
    r, l, s = v.r, v.l_coef, v.s
    ell = C1.scale(l)
    deg2 = (mul(ell, ell) - cohring.c2X().scale(q_tilde(v) / 30)).scale(Fraction(1, 2 * r))
    deg3 = C1_DUAL.scale(l * s / r)
    deg4 = cohring.point().scale(s * s / (2 * r))
    return CohClass(r) + ell + deg2 + deg3 + deg4
