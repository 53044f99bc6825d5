"""Koszul spectral sequence for End(Sigma_lam Q) restricted from Gr(2,6)
to X, forced degenerations, and Ext reports."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .bwb import bwb
from .chern import InternalInconsistency, chi_end
from .schur import IrrepSum, end_decomposition, present, reduced_level
from .weights import DELTA1, Weight2, Weight4, Weight6, WeightError, end_class, parse_weight6, reduce

SCHEMA = "schurfano-e1/1"

# Decomposition of the exterior powers of Sym^3 U.
_KOSZUL = {
    0: (Weight2((0, 0)),),
    1: (Weight2((3, 0)),),
    2: (Weight2((5, 1)), Weight2((3, 3))),
    3: (Weight2((6, 3)),),
    4: (Weight2((6, 6)),),
}


def koszul_factors(p: int) -> tuple[Weight2, ...]:
    if p not in _KOSZUL:
        raise ValueError(f"Koszul position {p} out of range 0..4")
    return _KOSZUL[p]


@dataclass(frozen=True)
class E1Entry:
    source: Weight6        # canonical End factor
    koszul: Weight2
    weight: tuple          # SL(6) weight, last entry 0
    dim: int
    mult: int

    def to_json(self) -> dict:
        return {
            "source": str(self.source),
            "koszul": str(self.koszul),
            "weight": ",".join(map(str, self.weight)),
            "dim": self.dim,
            "mult": self.mult,
        }

    @classmethod
    def from_json(cls, d: dict) -> "E1Entry":
        return cls(
            parse_weight6(d["source"]),
            Weight2(int(x) for x in d["koszul"].split(",")),
            tuple(int(x) for x in d["weight"].split(",")),
            int(d["dim"]),
            int(d["mult"]),
        )


def twisted_factor(source: Weight6, kappa: Weight2) -> Weight6:
    """The summand of source (x) Sigma_kappa U; the u-part of an End
    factor is a determinant power, so the tensor product is irreducible."""
    u = source.u_part
    if u[0] != u[1]:
        raise WeightError(f"{source} does not have a determinantal SL(2) part")
    return Weight6(source.q_part, Weight2((u[0] + kappa[0], u[1] + kappa[1])))


def factor_cohomology(source: Weight6) -> list[tuple[int, Weight2, "object"]]:
    """BWB outcome of ``source (x) wedge^p Sym^3 U`` for every p and
    Koszul summand, as (p, kappa, BwbResult)."""
    return [(p, kappa, bwb(twisted_factor(source, kappa))) for p in range(5) for kappa in _KOSZUL[p]]


@dataclass
class E1Page:
    lam: Weight4
    entries: dict = field(default_factory=dict)   # (p, q) -> list[E1Entry]

    def cells(self):
        return sorted(self.entries.items())

    def dim_at(self, p: int, q: int) -> int:
        return sum(e.dim * e.mult for e in self.entries.get((p, q), ()))

    def antidiagonal(self, n: int) -> list[tuple[int, int]]:
        return [(p, q) for (p, q) in self.entries if q - p == n]

    def antidiagonal_dim(self, n: int) -> int:
        return sum(self.dim_at(p, q) for p, q in self.antidiagonal(n))

    def euler_characteristic(self) -> int:
        return sum((-1) ** ((q - p) % 2) * self.dim_at(p, q) for (p, q) in self.entries)

    def rows(self) -> list[tuple]:
        """Table rows (mu, p, q, weight, dim, mult) with mu in the
        endomorphism presentation."""
        level = reduced_level(self.lam)
        out = []
        for (p, q), ents in self.cells():
            for e in ents:
                out.append((present(e.source, level), p, q, e.weight, e.dim, e.mult))
        out.sort(key=lambda r: (tuple(-x for x in r[0].entries), r[1], r[2], r[3]))
        return out

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam),
            "cells": [
                {"p": p, "q": q, "entries": [e.to_json() for e in ents]}
                for (p, q), ents in self.cells()
            ],
        }

    @classmethod
    def from_json(cls, d: dict) -> "E1Page":
        lam = Weight4(int(x) for x in d["lambda"].split(","))
        entries = {
            (c["p"], c["q"]): [E1Entry.from_json(e) for e in c["entries"]] for c in d["cells"]
        }
        return cls(lam, entries)


def _build_page(lam: Weight4, end: IrrepSum) -> E1Page:
    page = E1Page(lam)
    for source, mult in end.items():
        for p, kappa, res in factor_cohomology(source):
            if res.acyclic:
                continue
            page.entries.setdefault((p, res.degree), []).append(
                E1Entry(source, kappa, res.weight, res.dim, mult)
            )
    return page


def _cache_file(cache_dir: os.PathLike, key: Weight4) -> Path:
    return Path(cache_dir) / f"{key}.json"


def _cache_load(cache_dir, key: Weight4, lam: Weight4) -> Optional[E1Page]:
    path = _cache_file(cache_dir, key)
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("schema") != SCHEMA or data.get("key") != str(key):
        return None
    page = E1Page.from_json(data["page"])
    page.lam = lam
    return page


def _cache_store(cache_dir, key: Weight4, end: IrrepSum, page: E1Page) -> None:
    path = _cache_file(cache_dir, key)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = {
        "schema": SCHEMA,
        "key": str(key),
        "end_decomposition": end.to_records(),
        "page": page.to_json(),
    }
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(data, sort_keys=True, indent=1))
    tmp.replace(path)


def e1_page(lam: Weight4, cache_dir: Optional[os.PathLike] = None, check: bool = True) -> E1Page:
    """E1 page of the Koszul spectral sequence computing Ext^*(E, E).

    With ``check`` the alternating sum of dimensions is compared with the
    Euler characteristic obtained from Riemann-Roch.
    """
    lam = Weight4(lam)
    key, _ = reduce(lam)
    page = _cache_load(cache_dir, key, lam) if cache_dir else None
    if page is None:
        end = end_decomposition(lam)
        page = _build_page(lam, end)
        if cache_dir:
            _cache_store(cache_dir, key, end, page)
    if check:
        chi = chi_end(lam)
        if page.euler_characteristic() != chi:
            raise InternalInconsistency(
                f"E1 Euler characteristic {page.euler_characteristic()} != {chi} for {lam}"
            )
    return page


def degeneration_flags(page: E1Page) -> tuple[bool, ...]:
    """For n = 0..4: no differential d_r (r = 1..4) can enter or leave
    any nonzero E1 entry of total degree n.

    The restricted End bundle is the direct sum of its irreducible
    factors, each with its own Koszul resolution, so differentials only
    connect entries coming from the same factor.
    """
    occupied: dict[Weight6, set] = {}
    for (p, q), ents in page.entries.items():
        for e in ents:
            occupied.setdefault(e.source, set()).add((p, q))
    flags = []
    for n in range(5):
        forced = True
        for cells in occupied.values():
            for p, q in cells:
                if q - p != n:
                    continue
                for r in range(1, 5):
                    if (p + r, q + r - 1) in cells or (p - r, q - r + 1) in cells:
                        forced = False
        flags.append(forced)
    return tuple(flags)


# Ext^1 values settled by explicit resolutions, keyed by end_class so that
# twists and duals are found too.
KNOWN_RESOLUTIONS: dict[Weight4, dict[int, int]] = {
    end_class(Weight4((5, 3, 0, 0))): {1: 20},
}

DEGENERATION = "degeneration"
SERRE = "serre-duality"
EULER = "euler-characteristic"
KNOWN = "known-resolution"


@dataclass(frozen=True)
class ExtReport:
    lam: Weight4
    chi: int
    values: tuple        # per degree: int or None
    bounds: tuple        # per degree: (lo, hi)
    provenance: tuple    # per degree: str or None

    @property
    def complete(self) -> bool:
        return all(v is not None for v in self.values)

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam),
            "ext": list(self.values),
            "bounds": [list(b) for b in self.bounds],
            "provenance": list(self.provenance),
            "chi": self.chi,
        }


def ext_report(lam: Weight4, page: Optional[E1Page] = None, cache_dir=None) -> ExtReport:
    lam = Weight4(lam)
    page = page or e1_page(lam, cache_dir=cache_dir)
    chi = page.euler_characteristic()
    flags = degeneration_flags(page)
    vals: list = [None] * 5
    prov: list = [None] * 5
    for n in range(5):
        if flags[n]:
            vals[n], prov[n] = page.antidiagonal_dim(n), DEGENERATION

    def propagate():
        for i in range(5):
            if vals[i] is None and vals[4 - i] is not None:
                vals[i], prov[i] = vals[4 - i], SERRE
            elif vals[4 - i] is not None and vals[i] != vals[4 - i]:
                raise InternalInconsistency(f"ext^{i} != ext^{4 - i} for {lam}: {vals}")
        if vals[2] is None and vals[0] is not None and vals[1] is not None:
            vals[2], prov[2] = chi - 2 * vals[0] + 2 * vals[1], EULER

    propagate()
    known = KNOWN_RESOLUTIONS.get(end_class(lam), {})
    for i, v in known.items():
        if vals[i] is None:
            vals[i], prov[i] = v, KNOWN
    propagate()

    bounds = []
    for n in range(5):
        hi = page.antidiagonal_dim(n)
        if vals[n] is not None:
            if vals[n] > hi or vals[n] < 0:
                raise InternalInconsistency(f"ext^{n} = {vals[n]} outside [0, {hi}] for {lam}")
            bounds.append((vals[n], vals[n]))
        else:
            bounds.append((0, hi))
    if all(v is not None for v in vals):
        alt = sum((-1) ** i * v for i, v in enumerate(vals))
        if alt != chi:
            raise InternalInconsistency(f"ext values {vals} do not sum to chi = {chi} for {lam}")
    return ExtReport(lam, chi, tuple(vals), tuple(bounds), tuple(prov))


def k_set(lam: Weight4) -> IrrepSum:
    """New End factors when the first entry of ``lam`` grows by one.

    Canonical weights absorb the shift of the SL(2) level, so the
    comparison is a plain multiset difference.
    """
    lam = Weight4(lam)
    bigger = end_decomposition(Weight4(a + b for a, b in zip(lam, DELTA1)))
    smaller = IrrepSum((w.shift(1).canonical(), n) for w, n in end_decomposition(lam).items())
    try:
        return bigger.difference(smaller)
    except ValueError as exc:
        raise InternalInconsistency(f"End({lam}) does not embed in End({lam}+d1): {exc}") from exc
