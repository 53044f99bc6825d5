"""Command-line interface.

Every verb prints plain text by default and a stable JSON document with
``--json``.  Exit status: 0 on success, 1 when ``verify`` finds a failing
check, 2 on bad input, 3 when two internal routes disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from . import __version__
from .atomic import atomic_numeric_test, extended_mukai, is_atomic
from .bwb import bwb
from .chern import (
    InternalInconsistency, c2X_multiple, ch_schur_closed, chi_end, delta_general,
    discriminant, lambda_polys, mixed_modular,
)
from .kbc import verify_stabilization
from .koszul_ext import SCHEMA, e1_page, ext_report
from .schur import end_decomposition, present, rank, reduced_level
from .weights import WeightError, parse_partition, parse_weight2, parse_weight6

DEFAULTS = {
    "json": False,
    "csv": False,
    "table": False,
    "amax": 8,
    "max_lambda1": 8,
    "max_bc": 5,
    "cache_dir": None,
}


def _fs(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


# --- verbs -------------------------------------------------------------------

def cmd_chern(args) -> str:
    lam = parse_partition(args.lam)
    ch = ch_schur_closed(lam)
    pol = lambda_polys(lam)
    if args.json:
        return _dump({"lambda": str(lam), "ch": ch.to_json(), "polys": pol.to_json()})
    return f"ch({lam}) = {ch}"


def cmd_delta(args) -> str:
    lam = parse_partition(args.lam)
    d = delta_general(lam)
    k = c2X_multiple(discriminant(ch_schur_closed(lam)))
    if args.json:
        return _dump({"lambda": str(lam), "delta": _fs(d), "discriminant_c2X": _fs(k)})
    return f"delta({lam}) = {d}\nDelta = {k} * c2(X)"


def cmd_chi(args) -> str:
    lam = parse_partition(args.lam)
    chi = chi_end(lam)
    pol = lambda_polys(lam)
    if args.json:
        return _dump({"lambda": str(lam), "chi": chi, "P": _fs(pol.P), "r": pol.r})
    return f"chi({lam}, {lam}) = {chi}  (P = {pol.P}, r = {pol.r})"


def cmd_atomic(args) -> str:
    lam = parse_partition(args.lam)
    out = {"lambda": str(lam), "atomic": is_atomic(lam), "numeric_test": _fs(atomic_numeric_test(lam))}
    if out["atomic"]:
        out["mukai"] = extended_mukai(lam).to_json()
    if args.json:
        return _dump(out)
    lines = [f"atomic: {'yes' if out['atomic'] else 'no'}", f"(3 delta - 1)^2 - P = {out['numeric_test']}"]
    if out["atomic"]:
        m = out["mukai"]
        lines.append(f"extended Mukai vector: ({m['r']}, {m['l']} c1, {m['s']})")
    return "\n".join(lines)


def cmd_endo(args) -> str:
    lam = parse_partition(args.lam)
    level = reduced_level(lam)
    end = end_decomposition(lam)
    rows = [(str(present(w, level)), n, rank(w)) for w, n in end.items()]
    if args.json:
        return _dump({"lambda": str(lam), "terms": [{"weight": w, "mult": n, "dim": d} for w, n, d in rows]})
    if args.csv:
        return _csv(["weight", "mult", "dim"], rows)
    body = [f"{w:<22} x{n:<3} rank {d}" for w, n, d in rows]
    body.append(f"total rank {end.total_dim()} = {rank_sq(lam)}")
    return "\n".join(body)


def rank_sq(lam) -> str:
    r = lambda_polys(lam).r
    return f"{r}^2"


def cmd_bwb(args) -> str:
    w = parse_weight6(args.weight)
    res = bwb(w)
    if args.json:
        return _dump({"input": str(w), **res.to_dict()})
    if res.acyclic:
        return f"{w}: acyclic"
    return f"{w}: H^{res.degree} = Sigma_({','.join(map(str, res.weight))}), dim {res.dim}"


def _page_rows(lam, cache_dir):
    page = e1_page(lam, cache_dir=cache_dir)
    rows = [(str(mu), p, q, "(" + ",".join(map(str, wt)) + ")", dim, mult)
            for mu, p, q, wt, dim, mult in page.rows()]
    return page, rows


def cmd_koszul(args) -> str:
    lam = parse_partition(args.lam)
    page, rows = _page_rows(lam, args.cache_dir)
    header = ["mu", "K^i", "H^j", "Sigma", "dim", "mult"]
    if args.json:
        # Same document as a cache entry's page, so E1Page.from_json reads it back.
        return _dump({"schema": SCHEMA, **page.to_json(),
                      "euler_characteristic": page.euler_characteristic()})
    if args.csv:
        return _csv(header, rows)
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*r) for r in rows]
    if not args.table:
        lines.append(f"alternating sum {page.euler_characteristic()}")
    return "\n".join(lines)


def cmd_ext(args) -> str:
    lam = parse_partition(args.lam)
    rep = ext_report(lam, cache_dir=args.cache_dir)
    if args.json:
        return _dump(rep.to_json())
    if args.csv:
        return _csv(["lambda", "ext1", "ext2"], [(str(lam), _cell(rep, 1), _cell(rep, 2))])
    lines = []
    for i in range(5):
        lines.append(f"ext^{i} = {_cell(rep, i):<14} [{rep.provenance[i] or 'bounds only'}]")
    lines.append(f"chi = {rep.chi}")
    return "\n".join(lines)


def _cell(rep, i) -> str:
    v = rep.values[i]
    if v is not None:
        return str(v)
    lo, hi = rep.bounds[i]
    return f"[{lo}, {hi}]"


def cmd_kbc(args) -> str:
    b, c = args.b, args.c
    amax = max(args.amax, b + c - 1)
    rec = verify_stabilization(b, c, amax)
    if args.json:
        return _dump(rec.to_json())
    vals = ", ".join(f"a={a}: {n}" for a, n in rec.a_values)
    verdict = f"stabilizes at {rec.k} from a = {rec.threshold}" if rec.stabilized else "not stable"
    return f"k_({b},{c}): {vals}\n{verdict}; f({b},{c}) = {rec.f_value}"


def cmd_kbc_table(args) -> str:
    rows = []
    for total in range(args.max_bc + 1):
        for b in range(total, -1, -1):
            c = total - b
            rec = verify_stabilization(b, c, max(args.amax, b + c + 1))
            lam = f"(m,{b + c},{c},0)"
            rows.append((lam, f"({b},{c})", rec.k, rec.f_value, "yes" if rec.matches_f else "no"))
    header = ["lambda", "(b,c)", "k", "f(b,c)", "match"]
    if args.json:
        return _dump({"rows": [dict(zip(header, r)) for r in rows]})
    if args.csv:
        return _csv(header, rows)
    return "\n".join(f"{a:<12}{b:<8}{k!s:<8}{f!s:<8}{ok}" for a, b, k, f, ok in [tuple(header)] + rows)


def cmd_mixed(args) -> str:
    lam, mu = parse_partition(args.lam), parse_weight2(args.mu)
    ok, delta = mixed_modular(lam, mu)
    if args.json:
        return _dump({"lambda": str(lam), "mu": str(mu), "modular": ok, "discriminant": delta.to_json()})
    return f"modular: {'yes' if ok else 'no'}\nDelta = {delta}"


def cmd_verify(args) -> str:
    from .verify import verify_suite

    results = verify_suite(args.max_lambda1)
    for r in results:
        print(f"check {r.number}: {r.seconds:.2f}s", file=sys.stderr)
    args._failed = not all(r.passed for r in results)
    if args.json:
        return _dump({"checks": [r.to_json() for r in results]})
    return "\n".join(r.line() for r in results)


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=None, help="JSON output")
    common.add_argument("--csv", action="store_true", default=None, help="CSV output for tables")
    common.add_argument("--cache-dir", default=None, help="directory for cached E1 pages")
    common.add_argument("--config", default=None, help="JSON file with default option values")

    parser = argparse.ArgumentParser(
        prog="schurfano",
        description="Invariants of Schur functors of the quotient bundle on the Fano variety of lines of a cubic fourfold.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_text, *positionals):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for arg, h in positionals:
            p.add_argument(arg, help=h)
        p.set_defaults(func=fn)
        return p

    part = ("lam", 'partition "a,b,c,d"')
    verb("chern", cmd_chern, "Chern character", part)
    verb("delta", cmd_delta, "discriminant", part)
    verb("chi", cmd_chi, "self Euler characteristic", part)
    verb("atomic", cmd_atomic, "atomicity and extended Mukai vector", part)
    verb("endo", cmd_endo, "irreducible decomposition of End", part)
    verb("bwb", cmd_bwb, "Borel-Weil-Bott on Gr(2,6)", ("weight", 'weight "a,b,c,d|e,f"'))
    p = verb("koszul", cmd_koszul, "E1 page of the Koszul spectral sequence", part)
    p.add_argument("--table", action="store_true", default=None, help="bare table layout")
    verb("ext", cmd_ext, "self-Ext report", part)
    p = verb("kbc", cmd_kbc, "k_{b,c} along the a-direction")
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--amax", type=int, default=None)
    p = verb("kbc-table", cmd_kbc_table, "table of stabilized k_{b,c}")
    p.add_argument("--max-bc", type=int, default=None)
    p.add_argument("--amax", type=int, default=None)
    verb("mixed", cmd_mixed, "modularity of a Q-U tensor product", part, ("mu", 'weight "a,b"'))
    p = verb("verify", cmd_verify, "run the acceptance checks")
    p.add_argument("--max-lambda1", type=int, default=None)
    return parser


def _apply_config(args) -> None:
    """Fill unset options from the config file, then from DEFAULTS."""
    config = {}
    if args.config:
        config = json.loads(Path(args.config).read_text())
        unknown = set(config) - set(DEFAULTS)
        if unknown:
            raise WeightError(f"unknown config keys: {', '.join(sorted(unknown))}")
    for key, default in DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, config.get(key, default))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        _apply_config(args)
        out = args.func(args)
    except (WeightError, ValueError, OSError) as exc:
        parser.print_usage(sys.stderr)
        print(f"schurfano: error: {exc}", file=sys.stderr)
        return 2
    except InternalInconsistency as exc:
        print(f"schurfano: internal inconsistency: {exc}", file=sys.stderr)
        return 3
    print(out)
    print(f"[{args.verb}] {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return 1 if getattr(args, "_failed", False) else 0


if __name__ == "__main__":
    sys.exit(main())
