"""Command-line interface: ``tqf <command> ...`` or ``python -m tqf``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from . import densities as dens
from . import verify as ver
from .arith import format_rational
from .classtype import class_number, type_number
from .clifford import associated_form, clifford_order, half_integral_form, trace_zero_form
from .eisenstein_h import LevelError, admissible_level, admissible_levels, h_level
from .hurwitz import hurwitz
from .ternary.forms import FormError, TernaryForm
from .ternary.genus import BudgetExceeded, GenusKey, genus_enumerate, order_genus_key, s0_genus_key
from .ternary.reduction import aut_count
from .ternary.reps import rep_number

SCHEMA = "tqf-typenum/1"
CSV_HEADER = "level,n1,n2,h,t"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
DOMAIN_ERRORS = (LevelError, FormError, BudgetExceeded, dens.DensityError)


class Output:
    def __init__(self, command: str, fmt: str, stream=None):
        self.command = command
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self.rows: list[dict] = []
        self.lines: list[str] = []

    def row(self, record: dict, text: str | None = None) -> None:
        self.rows.append(record)
        if text is not None:
            self.lines.append(text)

    def flush(self) -> None:
        if self.fmt == "json":
            doc = {"schema": SCHEMA, "command": self.command, "rows": self.rows}
            self.stream.write(json.dumps(doc, separators=(",", ":")) + "\n")
        elif self.fmt == "csv":
            self.stream.write(CSV_HEADER + "\n")
            for r in self.rows:
                self.stream.write(f"{r['level']},{r['n1']},{r['n2']},{r['h']},{r['t']}\n")
        else:
            for line in self.lines:
                self.stream.write(line + "\n")


def _jobs(n: int | None) -> int:
    return n if n and n > 0 else (os.cpu_count() or 1)


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    """Order-preserving map, in worker processes when jobs > 1."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _form(text: str) -> TernaryForm:
    try:
        return TernaryForm.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _primes(text: str) -> frozenset[int]:
    text = text.strip().strip("{}")
    if not text:
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated primes, got {text!r}") from None


def _typenum_row(pair: tuple[int, int]) -> dict:
    level = admissible_level(*pair)
    return {"level": level.N, "n1": level.N1, "n2": level.N2, "h": class_number(level), "t": type_number(level)}


def cmd_typenum(args, out: Output) -> int:
    r = _typenum_row((args.n1, args.n2))
    out.row(r, f"h={r['h']} T={r['t']}")
    return EXIT_OK


def cmd_table(args, out: Output) -> int:
    pairs = [(lv.N1, lv.N2) for lv in admissible_levels(args.max_level)]
    for r in _pmap(_typenum_row, pairs, _jobs(args.jobs)):
        out.row(r, f"{r['level']:>6} {r['n1']:>6} {r['n2']:>6} {r['h']:>6} {r['t']:>6}")
    if out.lines:
        out.lines.insert(0, f"{'level':>6} {'N1':>6} {'N2':>6} {'h':>6} {'T':>6}")
    return EXIT_OK


def cmd_hclass(args, out: Output) -> int:
    value = h_level(args.d, admissible_level(args.n1, args.n2))
    out.row({"n1": args.n1, "n2": args.n2, "d": args.d, "value": format_rational(value)}, format_rational(value))
    return EXIT_OK


def cmd_hurwitz(args, out: Output) -> int:
    value = hurwitz(args.d)
    out.row({"d": args.d, "value": format_rational(value)}, format_rational(value))
    return EXIT_OK


def cmd_density(args, out: Output) -> int:
    f, p, n = args.form, args.p, args.n
    rec = {"form": list(f.coefficients), "p": p, "n": n}
    status = EXIT_OK
    if args.mode in ("closed", "both"):
        rec["closed"] = format_rational(dens.closed_form_density(f, p, n))
    if args.mode in ("count", "both"):
        rec["count"] = format_rational(dens.density_count(dens.DensityQuery(f, p, n)))
    if args.mode == "both":
        rec["agree"] = rec["closed"] == rec["count"]
        status = EXIT_OK if rec["agree"] else EXIT_FAIL
        text = f"closed={rec['closed']} count={rec['count']} {'agree' if rec['agree'] else 'DISAGREE'}"
    else:
        text = rec[args.mode]
    out.row(rec, text)
    return status


def cmd_repnum(args, out: Output) -> int:
    value = rep_number(args.form, args.n)
    out.row({"form": list(args.form.coefficients), "n": args.n, "value": value}, str(value))
    return EXIT_OK


def cmd_aut(args, out: Output) -> int:
    value = aut_count(args.form)
    out.row({"form": list(args.form.coefficients), "value": value}, str(value))
    return EXIT_OK


def cmd_genus(args, out: Output) -> int:
    if args.n1 is not None:
        level = admissible_level(args.n1, args.n2)
        key = s0_genus_key(level) if args.family == "s0" else order_genus_key(level)
    else:
        if args.level is None or args.disc is None or args.aniso is None:
            raise argparse.ArgumentTypeError("give --n1/--n2 or all of --level, --disc, --aniso")
        key = GenusKey(args.level, args.disc, args.aniso, args.split or frozenset())
    forms = genus_enumerate(key, args.budget)
    out.lines.append(f"{key}: {len(forms)} classes")
    for f in forms:
        aut = aut_count(f)
        out.row({"form": list(f.coefficients), "aut": aut}, f"{f}  |Aut|={aut}")
    return EXIT_OK


def cmd_clifford(args, out: Output) -> int:
    o = clifford_order(args.form)
    table = {
        "associated": associated_form(o),
        "trace_zero": trace_zero_form(o),
        "half_integral": half_integral_form(o),
    }
    for name, g in table.items():
        out.row({"name": name, "form": list(g.coefficients), "disc": g.disc, "level": g.level},
                f"{name:<14} {g}  d={g.disc} N={g.level}")
    return EXIT_OK


def _run_mass(pair):
    return ver.verify_mass(admissible_level(*pair))


def _run_typecount(pair):
    return ver.verify_type_count(admissible_level(*pair))


def _run_theta(args):
    pair, dmax = args
    return ver.verify_theta_identity(admissible_level(*pair), dmax)


SUITES = ("tables", "classone", "mass", "typecount", "theta", "densities", "all")
SUITE_ALIASES = {"appendixA": "tables", "appendixB": "classone"}


def _reports(args) -> Iterable[ver.VerificationReport]:
    jobs = _jobs(args.jobs)
    pairs = [(lv.N1, lv.N2) for lv in admissible_levels(args.max_level)]
    suite = SUITE_ALIASES.get(args.suite, args.suite)
    suites = SUITES[:-1] if suite == "all" else (suite,)
    for suite in suites:
        if suite == "tables":
            yield ver.verify_tables()
        elif suite == "classone":
            yield ver.verify_class_one(dmax=args.dmax)
        elif suite == "mass":
            yield from _pmap(_run_mass, pairs, jobs)
        elif suite == "typecount":
            yield from _pmap(_run_typecount, pairs, jobs)
        elif suite == "theta":
            yield from _pmap(_run_theta, [(p, args.dmax) for p in pairs], jobs)
        elif suite == "densities":
            yield ver.verify_densities(nmax=args.nmax)


def cmd_verify(args, out: Output) -> int:
    ok = True
    for rep in _reports(args):
        ok &= rep.passed
        record = rep.to_dict()
        if not args.details:
            record["checks"] = [c.to_dict() for c in rep.failures]
        record["count"] = len(rep.checks)
        out.row(record, rep.summary())
        for c in rep.failures[:20]:
            out.lines.append(f"  {c.description}: expected {format_rational(c.expected)}, got {format_rational(c.actual)}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tqf", description="Class and type numbers of quaternion orders of level (N1, N2).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, formats=("text", "json")):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--format", choices=formats, default="text")
        sp.set_defaults(func=fn)
        return sp

    sp = add("typenum", cmd_typenum, "class number h and type number T of one level")
    sp.add_argument("--n1", type=int, required=True)
    sp.add_argument("--n2", type=int, required=True)

    sp = add("table", cmd_table, "h and T for every level up to a bound", ("text", "csv", "json"))
    sp.add_argument("--max-level", type=int, default=100)
    sp.add_argument("--jobs", type=int, default=None)

    sp = add("hclass", cmd_hclass, "modified Hurwitz class number H^(N1,N2)(D)")
    sp.add_argument("--n1", type=int, required=True)
    sp.add_argument("--n2", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)

    sp = add("hurwitz", cmd_hurwitz, "Hurwitz class number H(D)")
    sp.add_argument("--d", type=int, required=True)

    sp = add("density", cmd_density, "p-adic local representation density")
    sp.add_argument("--form", type=_form, required=True, help="a,b,c,r,s,t")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mode", choices=("closed", "count", "both"), default="count")

    sp = add("repnum", cmd_repnum, "number of representations of n by a form")
    sp.add_argument("--form", type=_form, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("aut", cmd_aut, "order of the automorphism group of a form")
    sp.add_argument("--form", type=_form, required=True)

    sp = add("genus", cmd_genus, "class representatives of a genus")
    sp.add_argument("--n1", type=int)
    sp.add_argument("--n2", type=int, default=1)
    sp.add_argument("--family", choices=("s0", "order"), default="s0")
    sp.add_argument("--level", type=int)
    sp.add_argument("--disc", type=int)
    sp.add_argument("--aniso", type=_primes)
    sp.add_argument("--split", type=_primes)
    sp.add_argument("--budget", type=int, default=None)

    sp = add("clifford", cmd_clifford, "forms attached to the even Clifford order of a form")
    sp.add_argument("--form", type=_form, required=True)

    sp = add("verify", cmd_verify, "run a verification suite")
    sp.add_argument("--suite", choices=SUITES + tuple(SUITE_ALIASES), default="all", metavar="{" + ",".join(SUITES) + "}")
    sp.add_argument("--max-level", type=int, default=30)
    sp.add_argument("--dmax", type=int, default=ver.DEFAULT_DMAX)
    sp.add_argument("--nmax", type=int, default=500)
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--details", action="store_true", help="include passing checks in JSON")
    return parser


def _attach_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--form -1,0,...`` into ``--form=-1,0,...`` so argparse accepts it."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--form", "--aniso", "--split"):
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and nxt[1:2].isdigit():
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_attach_values(sys.argv[1:] if argv is None else argv))
    out = Output(args.command, args.format)
    try:
        code = args.func(args, out)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"tqf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DOMAIN_ERRORS as exc:
        print(f"tqf: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
