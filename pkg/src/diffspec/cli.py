"""Command-line front end: ``diffspec <command> ...``.

Exit status is 0 on success, 1 when a computed value disagrees with its
closed form or with a published value, and 2 for bad parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass

from . import cache
from . import closed_forms as cf
from .cyclotomy import QUADRANTS, build_partition, cyclotomic_number_closed
from .derivative import ExponentParams, Family, Spectrum, spectrum_bruteforce
from .errors import DiffSpecError, InconsistentClosedForm, ParameterError
from .field import build_field
from .search import DEFAULT_SEARCH_BOUND, search_exponents
from .verify import SUITES, Grid, run_suite

log = logging.getLogger("diffspec")

EXIT_OK, EXIT_MISMATCH, EXIT_PARAM = 0, 1, 2

# column order shared by the json and csv writers
COLUMNS = ("p", "n", "k", "d", "omega", "delta", "bound", "match")

# (p, n, k, bound, delta) as published for the comparison table
TABLE1 = (
    (5, 3, 2, 12, 6),
    (5, 5, 2, 12, 6),
    (5, 5, 4, 24, 6),
    (7, 3, 2, 24, 8),
    (7, 5, 2, 24, 8),
    (7, 5, 4, 48, 8),
    (7, 7, 2, 24, 8),
    (7, 7, 4, 48, 8),
    (7, 7, 6, 24, 8),
    (11, 3, 2, 60, 12),
)


@dataclass(frozen=True)
class ReportRow:
    p: int
    n: int
    k: int
    bound: int
    delta_closed: int
    delta_brute: int

    @property
    def match(self):
        return self.delta_closed == self.delta_brute


def omega_to_text(omega):
    return ";".join(f"{i}:{c}" for i, c in sorted(omega.items()))


def omega_from_text(text):
    return {int(i): int(c) for i, c in (part.split(":") for part in text.split(";") if part)}


def row_dict(p, n, k, d, spectrum, bound=None, match=None, **extra):
    row = {"p": p, "n": n, "k": k, "d": d,
           "omega": {str(i): c for i, c in spectrum.omega.items()},
           "delta": spectrum.delta, "bound": bound, "match": match}
    row.update(extra)
    return row


def spectrum_from_row(row) -> Spectrum:
    """Inverse of :func:`row_dict` for the spectrum part (json or csv row)."""
    omega = row["omega"]
    if isinstance(omega, str):
        omega = omega_from_text(omega)
    return Spectrum(int(row["p"]) ** int(row["n"]), {int(i): int(c) for i, c in omega.items()})


def write_rows(rows, fmt, out, human):
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    elif fmt == "csv":
        extra = [k for k in rows[0] if k not in COLUMNS] if rows else []
        w = csv.writer(out, lineterminator="\n")
        w.writerow(COLUMNS + tuple(extra))
        for row in rows:
            cells = []
            for key in COLUMNS + tuple(extra):
                v = row[key]
                if key == "omega":
                    v = omega_to_text({int(i): c for i, c in v.items()})
                elif isinstance(v, bool):
                    v = str(v).lower()
                cells.append("" if v is None else v)
            w.writerow(cells)
    else:
        human(out)


def _field(args, p, n):
    return build_field(p, n, cache_dir=args.cache_dir)


def _omega_table(brute, closed=None):
    idx = sorted(set(brute.omega) | set(closed.omega if closed else ()))
    lines = ["     i       brute" + ("      closed" if closed else "")]
    for i in idx:
        line = f"{i:>6}  {brute[i]:>10}"
        if closed:
            line += f"  {closed[i]:>10}"
        lines.append(line)
    return "\n".join(lines)


def cmd_spectrum(args, out):
    p, n = args.p, args.n
    if args.family:
        if args.k is None:
            raise ParameterError("--family needs --k")
        family = Family(args.family)
        params = ExponentParams.thm1(p, n, args.k) if family is Family.THM1 else \
            ExponentParams.thm2(p, n, args.k)
    elif args.d is not None:
        params = ExponentParams.raw(p, n, args.d)
    else:
        raise ParameterError("give either --d or --family with --k")
    F = _field(args, p, n)
    brute = spectrum_bruteforce(F, params.d)
    closed = bound = match = None
    if params.family is Family.THM1:
        closed = cf.spectrum_thm1(p, n, params.k)
        bound = cf.helleseth_bound(p, n, params.k)
    elif params.family is Family.THM2:
        closed = cf.spectrum_thm2(p, n, params.k)
    if closed is not None:
        match = closed.omega == brute.omega
    row = row_dict(p, n, params.k, params.d, brute, bound, match)

    def human(o):
        head = f"F_{p}^{n}  d = {params.d}"
        if params.family is not Family.RAW:
            head += f"  ({params.family.value}, k = {params.k})"
        o.write(head + "\n" + _omega_table(brute, closed) + "\n")
        o.write(f"delta = {brute.delta}")
        if bound is not None:
            o.write(f"  bound = {bound}")
        if match is not None:
            o.write(f"  match = {str(match).lower()}")
        o.write("\n")

    write_rows([row], args.format, out, human)
    return EXIT_OK if match in (None, True) else EXIT_MISMATCH


def table1_rows(cache_dir=None):
    """Recompute every comparison-table row; returns (ReportRow, published bound, published delta, spectrum)."""
    rows = []
    fields = {}
    for p, n, k, pub_bound, pub_delta in TABLE1:
        if (p, n) not in fields:
            fields[(p, n)] = build_field(p, n, cache_dir=cache_dir)
        brute = spectrum_bruteforce(fields[(p, n)], ExponentParams.thm1(p, n, k).d)
        r = ReportRow(p, n, k, cf.helleseth_bound(p, n, k), cf.spectrum_thm1(p, n, k).delta,
                      brute.delta)
        rows.append((r, pub_bound, pub_delta, brute))
    return rows


def cmd_table1(args, out):
    rows = table1_rows(args.cache_dir)
    ok = all(r.match and r.bound == pb and r.delta_brute == pd for r, pb, pd, _ in rows)
    dicts = [row_dict(r.p, r.n, r.k, ExponentParams.thm1(r.p, r.n, r.k).d, s, r.bound,
                      r.match and r.bound == pb and r.delta_brute == pd)
             for r, pb, pd, s in rows]

    def human(o):
        o.write("   p   n   k    bound  delta_closed  delta_brute  published  match\n")
        for (r, pb, pd, _), d in zip(rows, dicts):
            o.write(f"{r.p:>4}{r.n:>4}{r.k:>4}{r.bound:>9}{r.delta_closed:>14}{r.delta_brute:>13}"
                    f"{f'{pb}/{pd}':>11}  {str(d['match']).lower()}\n")

    write_rows(dicts, args.format, out, human)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_search(args, out):
    F = _field(args, args.p, args.n)
    outcome = search_exponents(F, args.max_delta, dedup=args.dedup, inverse=args.inverse,
                               bound=args.search_bound)
    rows = [row_dict(args.p, args.n, None, r.d, r.spectrum, canonical=r.canonical)
            for r in outcome.results]

    def human(o):
        o.write(f"F_{args.p}^{args.n}: {outcome.scanned} exponents scanned, "
                f"{len(rows)} with delta <= {args.max_delta}\n")
        o.write("       d  canonical  delta  omega\n")
        for r in outcome.results:
            o.write(f"{r.d:>8}{r.canonical:>11}{r.delta:>7}  {omega_to_text(r.spectrum.omega)}\n")

    write_rows(rows, args.format, out, human)
    for d, partner, kind in outcome.violations:
        print(f"error: {kind} identification fails: d={d} vs {partner}", file=sys.stderr)
    return EXIT_MISMATCH if outcome.violations else EXIT_OK


def cmd_verify(args, out):
    grid = Grid(args.p_max, args.exp_max, args.qn_max, args.n_max)
    status = EXIT_OK
    for rep in run_suite(args.suite, grid):
        out.write(f"[{rep.suite}] {len(rep.checks)} cases\n")
        if args.verbose_cases:
            for c in rep.checks:
                out.write(f"  {c.label()} {'ok' if c.ok else 'FAIL ' + c.detail}\n")
        else:
            out.write("  checked: " + " ".join(c.label() for c in rep.checks) + "\n")
        bad = rep.first_failure
        if bad:
            out.write(f"  FAIL at {bad.label()}: {bad.detail}\n")
            status = EXIT_MISMATCH
        else:
            out.write("  PASS\n")
    return status


def cmd_cyclotomy(args, out):
    part = build_partition(_field(args, args.p, args.n))
    status = EXIT_OK
    out.write(f"F_{args.p}^{args.n}\n (i,j)  enumerated  closed\n")
    for i, j in QUADRANTS:
        got, want = part.numbers[(i, j)], cyclotomic_number_closed(args.p, args.n, i, j)
        flag = "" if got == want else "  MISMATCH"
        if flag:
            status = EXIT_MISMATCH
        out.write(f" ({i},{j})  {got:>10}  {want:>6}{flag}\n")
    return status


def cmd_cache(args, out):
    where = args.cache_dir or cache.default_dir()
    if args.action == "clear":
        out.write(f"removed {cache.clear(where)} table file(s) from {where}\n")
        return EXIT_OK
    infos = cache.entries(where)
    if not infos:
        out.write(f"no table files in {where}\n")
    for info in infos:
        if "error" in info:
            out.write(f"{info['path']}: {info['error']}\n")
        else:
            out.write(f"{info['path']}: F_{info['p']}^{info['n']} modulus={info['modulus']} "
                      f"alpha={info['alpha']} entries={info['count']} bytes={info['bytes']}\n")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="diffspec", description=__doc__.splitlines()[0])
    ap.add_argument("--cache-dir", default=os.environ.get("DIFFSPEC_CACHE") or None,
                    help="directory for log-table files (default: $DIFFSPEC_CACHE, else no caching)")
    ap.add_argument("--threads", type=int, default=None,
                    help="worker threads, 0 = one per CPU (default: $DIFFSPEC_THREADS)")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("human", "json", "csv"), default="human")

    sp = sub.add_parser("spectrum", help="differential spectrum of one power function")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int)
    sp.add_argument("--family", choices=("thm1", "thm2"))
    sp.add_argument("--k", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("table1", help="recompute the bound-versus-exact comparison table")
    fmt(sp)
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("search", help="scan exponents for low uniformity")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-delta", type=int, required=True)
    sp.add_argument("--dedup", action="store_true", help="one exponent per Frobenius orbit")
    sp.add_argument("--inverse", action="store_true",
                    help="also merge d with its inverse mod q-1 (checked on every hit)")
    sp.add_argument("--search-bound", type=int, default=DEFAULT_SEARCH_BOUND)
    fmt(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="run closed-form against enumeration suites")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--p-max", type=int)
    sp.add_argument("--exp-max", type=int)
    sp.add_argument("--qn-max", type=int)
    sp.add_argument("--n-max", type=int, help="largest N for the residue-count suite")
    sp.add_argument("--cases", dest="verbose_cases", action="store_true",
                    help="one line per case instead of a compact list")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("cyclotomy", help="square/nonsquare quadrant sizes")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_cyclotomy)

    sp = sub.add_parser("cache", help="inspect or clear the table cache")
    sp.add_argument("action", choices=("inspect", "clear"))
    sp.set_defaults(func=cmd_cache)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.threads is not None:
        os.environ["DIFFSPEC_THREADS"] = str(args.threads)
    buf = io.StringIO()
    try:
        status = args.func(args, buf)
    except InconsistentClosedForm as exc:
        sys.stdout.write(buf.getvalue())
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ParameterError, DiffSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    sys.stdout.write(buf.getvalue())
    return status


if __name__ == "__main__":
    sys.exit(main())
