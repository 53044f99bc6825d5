"""Acceptance checks.  Each check returns a ``CheckResult``; ``verify_suite``
runs all of them in order and records how long each took."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import cohring, goldens
from .atomic import T_squared, atomic_numeric_test, extended_mukai_sym, is_atomic
from .bwb import bwb, inversion_count
from .chern import (
    ch_schur_closed, ch_schur_oracle, ch_sym_dragutin, chi_end, delta_sigma_U,
    discriminant, lambda_polys, mixed_modular,
)
from .cohring import C1SQ, CH2, mul
from .kbc import verify_stabilization
from .koszul_ext import KNOWN, e1_page, ext_report, koszul_factors, twisted_factor
from .schur import end_decomposition, present, reduced_level, weyl_dim_sl4
from .weights import Weight2, Weight4, Weight6, parse_weight6


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.number:2d} {self.name}"
        return f"{text}: {self.detail}" if self.detail else text

    def to_json(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed, "detail": self.detail}


def partitions(max_first: int) -> Iterator[Weight4]:
    """All partitions with four parts and first entry at most ``max_first``."""
    for a in range(max_first + 1):
        for b in range(a + 1):
            for c in range(b + 1):
                for d in range(c + 1):
                    yield Weight4((a, b, c, d))


def _failures(items, limit=5) -> str:
    items = list(items)
    shown = ", ".join(str(x) for x in items[:limit])
    more = f" (+{len(items) - limit} more)" if len(items) > limit else ""
    return f"{len(items)} failures: {shown}{more}"


# --- 1. closed form against the splitting-principle oracle ----------------

def check_oracle_equivalence(max_lambda1: int = 8) -> CheckResult:
    bad = [lam for lam in partitions(max_lambda1) if ch_schur_closed(lam) != ch_schur_oracle(lam)]
    n = sum(1 for _ in partitions(max_lambda1))
    detail = f"{n} partitions agree" if not bad else _failures(bad)
    return CheckResult(1, "Chern character closed form = oracle", not bad, detail)


# --- 2. symmetric powers, three routes ---------------------------------------

def check_symmetric_triple(max_m: int = 10) -> CheckResult:
    bad = []
    for m in range(max_m + 1):
        lam = Weight4((m, 0, 0, 0))
        a, b, c = ch_schur_closed(lam), ch_schur_oracle(lam), ch_sym_dragutin(m)
        if not (a == b == c):
            bad.append(m)
    return CheckResult(2, "Sym^m: closed = oracle = Stirling sum", not bad,
                       f"m <= {max_m}" if not bad else _failures(bad))


# --- 3. modularity -----------------------------------------------------------

def check_modularity(max_lambda1: int = 8) -> CheckResult:
    bad = []
    for lam in partitions(max_lambda1):
        pol = lambda_polys(lam)
        k = pol.delta * pol.r**2 / 4
        if discriminant(ch_schur_closed(lam)) != cohring.c2X().scale(k) or k.denominator != 1:
            bad.append(lam)
    return CheckResult(3, "Delta = (delta r^2 / 4) c2(X), integral", not bad,
                       f"lambda1 <= {max_lambda1}" if not bad else _failures(bad))


# --- 4. Euler characteristics ------------------------------------------------

def check_euler(max_lambda1: int = 8) -> CheckResult:
    bad = []
    for lam in partitions(max_lambda1):
        pol = lambda_polys(lam)
        ch = ch_schur_closed(lam)
        chi = chi_end(lam, check=False)
        if not (chi == 3 * pol.P * pol.r**2 == cohring.euler_pairing(ch, ch)):
            bad.append(lam)
    anchors = {(2, 1, 0, 0): 363, (3, 2, 1, 0): 35328}
    for lam, want in anchors.items():
        if chi_end(Weight4(lam)) != want:
            bad.append(("anchor", lam))
    return CheckResult(4, "chi(E,E) = 3 P r^2 = HRR", not bad,
                       f"lambda1 <= {max_lambda1}, anchors 363 and 35328" if not bad else _failures(bad))


# --- 5. ring constants -------------------------------------------------------

def check_ring_constants() -> CheckResult:
    integ = cohring.integrate
    c2 = cohring.c2X()
    got = {
        "c2(X)^2": integ(mul(c2, c2)),
        "c1^4": integ(mul(C1SQ, C1SQ)),
        "ch2^2": integ(mul(CH2, CH2)),
        "chi(Q)": cohring.euler_pairing(cohring.ONE, cohring.ch_Q()),
        "chi(O_X)": cohring.euler_pairing(cohring.ONE, cohring.ONE),
    }
    want = {"c2(X)^2": 828, "c1^4": 108, "ch2^2": 9, "chi(Q)": 6, "chi(O_X)": 3}
    bad = [f"{k}={got[k]}" for k in want if got[k] != want[k]]
    return CheckResult(5, "cohomology ring constants", not bad,
                       "828, 108, 9, 6, 3" if not bad else _failures(bad))


# --- 6. atomicity ------------------------------------------------------------

def check_atomicity(max_lambda1: int = 10, max_m: int = 10) -> CheckResult:
    bad = [lam for lam in partitions(max_lambda1)
           if is_atomic(lam) != (atomic_numeric_test(lam) == 0)]
    for m in range(max_m + 1):
        v = extended_mukai_sym(m)
        if T_squared(v) != cohring.mukai_vector(ch_schur_closed(Weight4((m, 0, 0, 0)))):
            bad.append(("T", m))
    return CheckResult(6, "atomic dichotomy and T(v~^(2)) = v(Sym^m Q)", not bad,
                       f"lambda1 <= {max_lambda1}, m <= {max_m}" if not bad else _failures(bad))


# --- 7. printed tables -------------------------------------------------------

def _trim(weight) -> tuple:
    w = list(weight)
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def _table_rows(page, with_mult: bool) -> list:
    rows = []
    for (p, q), ents in page.entries.items():
        for e in ents:
            row = (str(e.source), p, q, _trim(e.weight), e.dim)
            rows.append(row + (e.mult,) if with_mult else row)
    return sorted(rows)


def _printed_rows(table: dict, with_mult: bool) -> list:
    rows = []
    for r in table["rows"]:
        row = (str(parse_weight6(r["mu"]).canonical()), r["K"], r["H"], _trim(r["sigma"]), r["dim"])
        rows.append(row + (r["mult"],) if with_mult else row)
    return sorted(rows)


def compare_ext_table(name: str) -> tuple[list, list]:
    """(printed rows not computed, computed rows not printed)."""
    table = goldens.load("ext_tables")[name]
    with_mult = "mult" in table["columns"]
    lam = Weight4(int(x) for x in table["lambda"].split(","))
    printed = _printed_rows(table, with_mult)
    computed = _table_rows(e1_page(lam), with_mult)
    level = reduced_level(lam)

    def shown(r):
        return (str(present(parse_weight6(r[0]), level)),) + r[1:]

    missing = [shown(r) for r in printed if r not in computed]
    extra = [shown(r) for r in computed if r not in printed]
    return missing, extra


def family_ext_expected(max_m: int = 6) -> list[tuple]:
    """(lambda, ext1, ext2, family) for every printed row, families up to
    ``max_m``; family is None for the isolated rows."""
    data = goldens.load("ext_families")
    out = []
    for fam in data["families"]:
        for m in range(fam["m_min"], max_m + 1):
            lam = goldens.family_member(fam["family"], m)
            r = weyl_dim_sl4(lam)
            poly = sum(c * m ** (4 - i) for i, c in enumerate(fam["poly"]))
            factor = Fraction(poly, fam["den"])
            ext2 = 3 * (factor**2 if fam["square"] else factor) * r * r + fam["const"]
            out.append((lam, fam["ext1"], ext2, fam["family"]))
    for row in data["fixed"]:
        lam = Weight4(int(x) for x in row["lambda"].split(","))
        out.append((lam, row["ext1"], row["ext2"], None))
    return out


def check_tables(cache_dir=None) -> CheckResult:
    problems = []
    for name in ("ext_table_2100", "ext_table_3210"):
        missing, extra = compare_ext_table(name)
        if missing or extra:
            problems.append(f"{name}: printed-only {missing}, computed-only {extra}")
    wanted = {"m,1,0,0", "m,1,1,0", "m,2,0,0", None}
    for lam, e1, e2, fam in family_ext_expected():
        if fam not in wanted:
            continue
        rep = ext_report(lam, cache_dir=cache_dir)
        if rep.values[1] != e1 or rep.values[2] != e2:
            problems.append(f"{lam}: printed ({e1}, {e2}), computed {rep.values[1:3]}")
    rep = ext_report(Weight4((5, 3, 0, 0)), cache_dir=cache_dir)
    if KNOWN not in rep.provenance:
        problems.append("(5,3,0,0) did not use the known-resolution registry")
    detail = "both E1 tables and all printed ext rows" if not problems else "; ".join(problems)
    return CheckResult(7, "printed Ext tables reproduced", not problems, detail)


# --- 8. Borel-Weil-Bott calibration -----------------------------------------

def _norm(w) -> tuple:
    return tuple(x - w[-1] for x in w)


def sym_factor_expected(n: int) -> dict:
    """Printed outcome for (2n,n,n,0|n,n) (x) each Koszul summand, keyed by
    (p, kappa): None for acyclic, else (degree, normalized weight)."""
    out = {}
    for p in range(5):
        for kappa in koszul_factors(p):
            out[(p, tuple(kappa))] = None
    if n == 0:
        out[(0, (0, 0))] = (0, (0,) * 6)
    elif n >= 3:
        out[(0, (0, 0))] = (2, _norm((2 * n - 2, n - 2, n - 2, n - 3, n - 3, 0)))
    if n == 0:
        out[(2, (5, 1))] = (4, (0,) * 6)
    elif n >= 2:
        out[(2, (5, 1))] = (4, _norm((2 * n - 2, n, n - 1, n - 1, n - 2, 0)))
    if n == 0:
        out[(4, (6, 6))] = (8, (0,) * 6)
    elif n >= 3:
        out[(4, (6, 6))] = (6, _norm((2 * n - 2, n + 1, n + 1, n, n, 0)))
    return out


def sym_factor_computed(n: int) -> dict:
    src = Weight6(Weight4((2 * n, n, n, 0)), Weight2((n, n)))
    out = {}
    for p in range(5):
        for kappa in koszul_factors(p):
            res = bwb(twisted_factor(src, kappa))
            out[(p, tuple(kappa))] = None if res.acyclic else (res.degree, res.weight)
    return out


def bubble_sort_distance(v) -> int:
    """Adjacent swaps needed to sort into non-increasing order."""
    v, swaps = list(v), 0
    for i in range(len(v)):
        for j in range(len(v) - 1 - i):
            if v[j] < v[j + 1]:
                v[j], v[j + 1] = v[j + 1], v[j]
                swaps += 1
    return swaps


def check_bwb(max_n: int = 10, samples: int = 10_000, seed: int = 0) -> CheckResult:
    bad = [n for n in range(max_n + 1) if sym_factor_expected(n) != sym_factor_computed(n)]
    rng = random.Random(seed)
    for _ in range(samples):
        v = rng.sample(range(-6, 7), 6)
        if inversion_count(v) != bubble_sort_distance(v):
            bad.append(tuple(v))
    return CheckResult(8, "Borel-Weil-Bott calibration", not bad,
                       f"n <= {max_n}, {samples} random tuples" if not bad else _failures(bad))


# --- 9. generator lists and rank sums ---------------------------------------

def k_list_mismatches(max_m: int = 8) -> list[tuple[str, int, dict]]:
    out = []
    for name in goldens.family_names():
        for m in range(goldens.family_start(name), max_m + 1):
            printed = goldens.printed_k_list(name, m)
            computed = goldens.computed_k_list(name, m)
            if printed != computed:
                keys = set(printed) | set(computed)
                diff = {str(present(k, m)): (printed.get(k, 0), computed.get(k, 0))
                        for k in sorted(keys) if printed.get(k, 0) != computed.get(k, 0)}
                out.append((name, m, diff))
    return out


def rank_sum_failures(max_m: int = 12) -> list[tuple[str, int, str]]:
    out = []
    for name in goldens.family_names():
        for m in range(goldens.family_start(name), max_m + 1):
            formula = goldens.rank_sum_formula(name, m)
            if formula != goldens.rank_square_difference(name, m):
                out.append((name, m, "r^2 difference"))
            if formula != goldens.rank_sum_printed(name, m):
                out.append((name, m, "sum over printed list"))
    return out


def check_k_lists(max_m: int = 8, max_m_ranks: int = 12) -> CheckResult:
    mism = k_list_mismatches(max_m)
    ranks = rank_sum_failures(max_m_ranks)
    parts = []
    if mism:
        parts.append("list mismatches " + "; ".join(f"{n} m={m} {d} (printed, computed)" for n, m, d in mism))
    if ranks:
        parts.append("rank-sum failures " + ", ".join(f"{n} m={m} [{w}]" for n, m, w in ranks))
    ok = not (mism or ranks)
    detail = f"9 families, m <= {max_m}; rank sums m <= {max_m_ranks}" if ok else " | ".join(parts)
    return CheckResult(9, "generator lists and rank sums", ok, detail)


# --- 10. k_{b,c} --------------------------------------------------------------

def check_kbc(max_bc: int = 5, a_max: int = 8) -> CheckResult:
    bad, stable = [], {}
    for total in range(max_bc + 1):
        for b in range(total + 1):
            c = total - b
            rec = verify_stabilization(b, c, max(a_max, b + c + 1))
            if not rec.matches_f:
                bad.append((b, c, rec.k, rec.f_value))
            stable[(b, c)] = rec.k
    for (b, c), k in stable.items():
        if stable.get((c, b)) != k:
            bad.append(("symmetry", b, c))
    for row in goldens.load("kbc_table")["rows"]:
        if stable.get((row["b"], row["c"])) != row["k"]:
            bad.append(("table", row["b"], row["c"]))
    return CheckResult(10, "k_{b,c}: stabilization, symmetry, f(b,c), table", not bad,
                       f"b + c <= {max_bc}" if not bad else _failures(bad))


# --- 11. the Ext^1 lower-bound factor ----------------------------------------

def ext1_factor_expected(lam: Weight4) -> int:
    l1, l2, l3, l4 = lam
    if l1 > l2 > l3 > l4:
        return 2
    if l1 == l2 > l3 or l1 > l2 == l3 > l4 or l2 > l3 == l4:
        return 1
    return 0


EXT1_FACTOR = Weight6(Weight4((2, 2, 0, 0)), Weight2((1, 1))).canonical()


def check_ext1_factor(max_lambda1: int = 6) -> CheckResult:
    bad = [lam for lam in partitions(max_lambda1)
           if end_decomposition(lam).get(EXT1_FACTOR, 0) != ext1_factor_expected(lam)]
    return CheckResult(11, "Ext^1 lower-bound factor multiplicity", not bad,
                       f"lambda1 <= {max_lambda1}" if not bad else _failures(bad))


# --- 12. Schur functors of U ------------------------------------------------

def check_schur_u(max_m: int = 10, max_l1: int = 4, max_mu1: int = 4) -> CheckResult:
    bad = []
    for m in range(max_m + 1):
        k, _ = delta_sigma_U(Weight2((m, 0)))
        if k != Fraction(m * (m + 2) * (m + 1) ** 2, 12):
            bad.append(("Sym", m))
    for lam in partitions(max_l1):
        for a in range(max_mu1 + 1):
            for b in range(a + 1):
                mod, _ = mixed_modular(lam, Weight2((a, b)))
                if mod != (a == b):
                    bad.append((tuple(lam), (a, b)))
    return CheckResult(12, "Schur functors of U: Delta and mixed modularity", not bad,
                       f"m <= {max_m}; lambda1 <= {max_l1}, mu1 <= {max_mu1}" if not bad else _failures(bad))


CHECKS: list[Callable[..., CheckResult]] = [
    check_oracle_equivalence, check_symmetric_triple, check_modularity, check_euler,
    check_ring_constants, check_atomicity, check_tables, check_bwb, check_k_lists,
    check_kbc, check_ext1_factor, check_schur_u,
]


def verify_suite(max_lambda1: int = 8, only: set[int] | None = None) -> list[CheckResult]:
    """Run the acceptance checks.  ``max_lambda1`` bounds the partition
    sweeps of checks 1, 3 and 4 and must be at least 4."""
    if max_lambda1 < 4:
        raise ValueError("max_lambda1 must be at least 4")
    sweeps = {1: check_oracle_equivalence, 3: check_modularity, 4: check_euler}
    results = []
    for i, fn in enumerate(CHECKS, start=1):
        if only and i not in only:
            continue
        t0 = time.perf_counter()
        try:
            res = fn(max_lambda1) if i in sweeps else fn()
        except Exception as exc:  # a crash is a failed check, not a crashed report
            res = CheckResult(i, fn.__name__, False, f"{type(exc).__name__}: {exc}")
        res.seconds = time.perf_counter() - t0
        results.append(res)
    return results
