"""Borel-Weil-Bott on Gr(2,6) for irreducible homogeneous bundles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .schur import weyl_dim_sl6
from .weights import Weight6

RHO6 = (5, 4, 3, 2, 1, 0)


@dataclass(frozen=True)
class BwbResult:
    """Either acyclic, or a single nonzero cohomology group in ``degree``
    carrying the SL(6) irrep ``weight`` (last entry normalized to 0)."""

    acyclic: bool
    degree: Optional[int] = None
    weight: Optional[tuple[int, ...]] = None
    dim: int = 0

    def to_dict(self) -> dict:
        if self.acyclic:
            return {"outcome": "acyclic", "degree": None, "weight": None, "dim": 0}
        return {
            "outcome": "cohomology",
            "degree": self.degree,
            "weight": ",".join(map(str, self.weight)),
            "dim": self.dim,
        }


ACYCLIC = BwbResult(True)


def inversion_count(v: Sequence[int]) -> int:
    """Number of pairs i < j with v[i] < v[j]."""
    return sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] < v[j])


def bwb(w: Weight6) -> BwbResult:
    v = [a + r for a, r in zip(w.entries, RHO6)]
    if len(set(v)) < len(v):
        return ACYCLIC
    degree = inversion_count(v)
    top = sorted(v, reverse=True)
    nu = [a - r for a, r in zip(top, RHO6)]
    nu = tuple(a - nu[-1] for a in nu)
    return BwbResult(False, degree, nu, weyl_dim_sl6(nu))
