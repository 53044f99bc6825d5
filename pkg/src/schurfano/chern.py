"""Chern characters of Schur functors of Q, with two independent oracles,
discriminants, self-Euler characteristics, and the analogous discriminant
computation for Schur functors of U."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial, prod
from typing import Iterator, Sequence

from . import cohring
from .cohring import C1, C1SQ, CH2, CH3, CH4, ONE, CohClass, mul
from .schur import weyl_dim_sl2, weyl_dim_sl4
from .weights import Weight2, Weight4, WeightError, reduce


class InternalInconsistency(RuntimeError):
    """Two routes to the same quantity disagree."""


@dataclass(frozen=True)
class LambdaPolys:
    r: int
    ell: Fraction
    tau: Fraction
    delta: Fraction
    xi: Fraction
    P: Fraction

    def to_json(self) -> dict:
        return {
            "r": self.r,
            **{k: _fs(getattr(self, k)) for k in ("ell", "tau", "delta", "xi", "P")},
        }


def _fs(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _as_partition(lam) -> Weight4:
    lam = lam if isinstance(lam, Weight4) else Weight4(lam)
    if not lam.is_partition:
        raise WeightError(f"{lam} is not a partition")
    return lam


def _alpha(t, s):
    return 9 * t**2 + 21 * t * s + 9 * s**2 - 33 * t - 30 * s + 21


def _beta(t, s):
    return (21 * t**2 * s + 21 * t * s**2 - 15 * t**2 - 18 * t * s
            + 6 * s**2 + t - 8 * s - 6)


def _gamma(t, s):
    return (9 * t**2 * s**2 - 9 * t**2 * s + 9 * t * s**2 - 3 * t**2
            + 13 * t * s - 3 * s**2 - 14 * t + 14 * s)


def ell_of(m, t, s) -> Fraction:
    return Fraction(m + t + s, 4)


def tau_of(m, t, s) -> Fraction:
    return Fraction(-2 * (m * t + m * s + t * s) + 3 * m + t - s, 3)


def delta_of(m, t, s) -> Fraction:
    return (4 * ell_of(m, t, s) ** 2 + tau_of(m, t, s)) / 5


def xi_of(m, t, s) -> Fraction:
    return Fraction(_alpha(t, s) * m**2 + _beta(t, s) * m + _gamma(t, s), 60)


def P_of(m, t, s) -> Fraction:
    l, tau, xi = ell_of(m, t, s), tau_of(m, t, s), xi_of(m, t, s)
    return (1 - Fraction(23, 20) * (4 * l**2 + tau)
            + (576 * l**4 + 288 * l**2 * tau + Fraction(69, 4) * tau**2 + 50 * xi) / 100)


def rank_of(m, t, s) -> int:
    # Valid (and possibly 0) for any integers; used by the summation identities.
    num = (m + 3) * (t + 2) * (s + 1) * (m - t + 1) * (m - s + 2) * (t - s + 1)
    return num // 12


def lambda_polys(lam: Weight4) -> LambdaPolys:
    """All polynomial invariants of ``lam``, evaluated on its reduction."""
    (m, t, s, _), _ = reduce(_as_partition(lam))
    return LambdaPolys(
        r=weyl_dim_sl4(Weight4((m, t, s, 0))),
        ell=ell_of(m, t, s),
        tau=tau_of(m, t, s),
        delta=delta_of(m, t, s),
        xi=xi_of(m, t, s),
        P=P_of(m, t, s),
    )


def delta_general(lam: Weight4) -> Fraction:
    """Discriminant ratio written directly in the four entries."""
    l1, l2, l3, l4 = _as_partition(lam)
    sq = sum(x * x for x in (l1, l2, l3, l4))
    cross = sum(a * b for i, a in enumerate((l1, l2, l3, l4)) for b in (l1, l2, l3, l4)[i + 1:])
    return Fraction(3 * sq - 2 * cross + 12 * l1 + 4 * l2 - 4 * l3 - 12 * l4, 60)


def ch_schur_closed(lam: Weight4) -> CohClass:
    """Chern character from the closed-form polynomials, twisted back
    by ``exp(l4 c1)`` when the last entry is nonzero."""
    lam = _as_partition(lam)
    (m, t, s, _), twist = reduce(lam)
    r = rank_of(m, t, s)
    l, tau, d, xi = ell_of(m, t, s), tau_of(m, t, s), delta_of(m, t, s), xi_of(m, t, s)
    ch = CohClass(
        r,
        l * r,
        (l * l - d / 4) * r / 2,
        d * r,
        tau * l * r,
        xi * r,
    )
    if twist:
        ch = mul(ch, cohring.exp_c1(twist))
    return ch


# --- Oracle 1: Schur polynomial in the exponentiated Chern roots -----------
#
# Polynomials in the power sums p1..p4 of the roots, truncated at weighted
# degree 4.  Keys are exponent vectors (e1, e2, e3, e4).

_Poly = dict


def _pweight(e) -> int:
    return e[0] + 2 * e[1] + 3 * e[2] + 4 * e[3]


def _padd(a: _Poly, b: _Poly, k=1) -> _Poly:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + k * c
    return {e: c for e, c in out.items() if c}


def _pmul(a: _Poly, b: _Poly) -> _Poly:
    out: _Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if _pweight(e) <= 4:
                out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


_ZERO_E = (0, 0, 0, 0)


def _unit_e(d: int) -> tuple:
    return tuple(1 if i == d - 1 else 0 for i in range(4))


@lru_cache(maxsize=None)
def _complete_symmetric(n_roots: int, kmax: int) -> tuple:
    """h_0..h_kmax of (e^{x_1}, ..., e^{x_n}) via Newton's identities.

    p_j(e^x) = n + sum_d j^d p_d / d!.
    """
    pj = [None]
    for j in range(1, kmax + 1):
        poly = {_ZERO_E: Fraction(n_roots)}
        for d in range(1, 5):
            poly[_unit_e(d)] = Fraction(j**d, factorial(d))
        pj.append(poly)
    h = [{_ZERO_E: Fraction(1)}]
    for k in range(1, kmax + 1):
        acc: _Poly = {}
        for j in range(1, k + 1):
            acc = _padd(acc, _pmul(pj[j], h[k - j]))
        h.append({e: c / k for e, c in acc.items()})
    return tuple(h)


def _schur_poly(shape: Sequence[int], n_roots: int) -> _Poly:
    """Jacobi-Trudi determinant det(h_{shape_i - i + j})."""
    n = len(shape)
    kmax = shape[0] + n - 1 if n else 0
    h = _complete_symmetric(n_roots, max(kmax, 0))

    def entry(i, j):
        k = shape[i] - i + j
        if k < 0:
            return {}
        return h[k]

    total: _Poly = {}
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        term: _Poly = {_ZERO_E: Fraction(1)}
        for i, j in enumerate(perm):
            term = _pmul(term, entry(i, j))
            if not term:
                break
        if term:
            total = _padd(total, term, sign)
    return total


def _perm_sign(perm) -> int:
    sign, seen = 1, list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def _substitute(poly: _Poly, images: Sequence[CohClass]) -> CohClass:
    out = CohClass()
    for e, c in poly.items():
        term = ONE
        for img, k in zip(images, e):
            for _ in range(k):
                term = mul(term, img)
        out = out + term.scale(c)
    return out


_CH_BASIS = (C1, CH2, CH3, CH4)


def _power_sum_images(sign: int) -> tuple:
    # p_d = d! ch_d; the roots of U have ch_d(U) = -ch_d(Q) for d >= 1.
    return tuple(b.scale(sign * factorial(d + 1)) for d, b in enumerate(_CH_BASIS))


def ch_schur_oracle(lam: Weight4) -> CohClass:
    """Chern character by the splitting principle, with no use of the
    closed-form polynomials.  The last entry is not reduced away."""
    lam = _as_partition(lam)
    return _substitute(_schur_poly(tuple(lam), 4), _power_sum_images(+1))


def ch_schur_U(mu: Weight2) -> CohClass:
    """Chern character of a Schur functor of the rank-2 bundle U."""
    mu = mu if isinstance(mu, Weight2) else Weight2(mu)
    if mu[1] < 0:
        raise WeightError(f"{mu} is not a partition")
    return _substitute(_schur_poly(tuple(mu), 2), _power_sum_images(-1))


# --- Oracle 2: the Stirling-number formula for symmetric powers ------------

@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _partitions_nonzero(max_size: int) -> Iterator[tuple[int, ...]]:
    def rec(left, cap, acc):
        yield acc
        for part in range(min(left, cap), 0, -1):
            yield from rec(left - part, part, acc + (part,))

    yield from rec(max_size, max_size, ())


def _multiplicity_norm(lam: tuple[int, ...]) -> int:
    return prod(factorial(lam.count(v)) for v in set(lam))


def _sub_compositions(lam: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    def rec(i, acc):
        if i == len(lam):
            yield acc
            return
        for v in range(1, lam[i] + 1):
            yield from rec(i + 1, acc + (v,))

    yield from rec(0, ())


def ch_sym_dragutin(m: int) -> CohClass:
    """ch(Sym^m Q) as a sum over partitions weighted by Stirling numbers."""
    if m < 0:
        raise ValueError("m must be non-negative")
    out = CohClass()
    for lam in _partitions_nonzero(4):
        ch_lam = ONE
        for part in lam:
            ch_lam = mul(ch_lam, _CH_BASIS[part - 1])
        weight = Fraction(0)
        for mu in _sub_compositions(lam):
            size = sum(mu)
            if size > m:
                continue
            weight += (comb(m + 3, m - size)
                       * prod(factorial(x - 1) for x in mu)
                       * prod(stirling2(a, b) for a, b in zip(lam, mu)))
        out = out + ch_lam.scale(weight / _multiplicity_norm(lam))
    return out


# --- Derived invariants ----------------------------------------------------

def discriminant(ch: CohClass) -> CohClass:
    """c1^2 - 2 rk ch2, as a degree-4 class."""
    c1 = ch.part(1)
    return (mul(c1, c1) - (ch.part(2)).scale(2 * ch.a0)).part(2)


def xi_invariant(ch: CohClass) -> CohClass:
    """ch2^2 - 2 c1 ch3 + 2 rk ch4, as a degree-8 class."""
    ch2 = ch.part(2)
    return (mul(ch2, ch2) - mul(ch.part(1), ch.part(3)).scale(2)
            + ch.part(4).scale(2 * ch.a0)).part(4)


def c2X_multiple(x: CohClass) -> Fraction | None:
    """The rational k with ``x == k c2(X)``, or ``None``."""
    c2 = cohring.c2X()
    k = x.a2
    return k if (x - c2.scale(k)).is_zero() else None


def chi_end(lam: Weight4, check: bool = True) -> int:
    """chi(E, E) for E the Schur functor of Q, as 3 P r^2.

    With ``check`` the value is compared with Riemann-Roch on the closed
    form Chern character.
    """
    pol = lambda_polys(lam)
    value = 3 * pol.P * pol.r**2
    if value.denominator != 1:
        raise InternalInconsistency(f"non-integral Euler characteristic {value} for {lam}")
    if check:
        ch = ch_schur_closed(lam)
        hrr = cohring.euler_pairing(ch, ch)
        if hrr != value:
            raise InternalInconsistency(f"3Pr^2 = {value} but HRR gives {hrr} for {lam}")
    return int(value)


def delta_U() -> CohClass:
    return C1SQ.scale(Fraction(3, 2)) - cohring.c2X().scale(Fraction(1, 2))


def rho(mu: Weight2) -> Fraction:
    m1, m2 = mu
    return Fraction(m1 * m1 + m2 * m2 - 2 * m1 * m2 + 2 * m1 - 2 * m2, 6)


def delta_sigma_U(mu: Weight2) -> tuple[Fraction, CohClass]:
    """Coefficient k with Delta(Sigma_mu U) = k Delta(U), and the class itself."""
    mu = mu if isinstance(mu, Weight2) else Weight2(mu)
    if mu[1] < 0:
        raise WeightError(f"{mu} is not a partition")
    k = rho(mu) / 2 * weyl_dim_sl2(mu) ** 2
    return k, delta_U().scale(k)


def mixed_modular(lam: Weight4, mu: Weight2) -> tuple[bool, CohClass]:
    """Discriminant of Sigma_lam Q (x) Sigma_mu U by the tensor rule, and
    whether it is a multiple of c2(X)."""
    lam = _as_partition(lam)
    mu = mu if isinstance(mu, Weight2) else Weight2(mu)
    pol = lambda_polys(lam)
    rk_e, rk_f = pol.r, weyl_dim_sl2(mu)
    delta_e = cohring.c2X().scale(pol.delta * rk_e**2 / 4)
    _, delta_f = delta_sigma_U(mu)
    total = delta_e.scale(rk_f**2) + delta_f.scale(rk_e**2)
    return c2X_multiple(total) is not None, total
