"""Command line interface: ``unimap count|verify|sample|stanley|constellation|dist``.

Exit codes: 0 on success, 1 on usage or domain errors, 2 when a
verification finds a mismatch.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import counting as C
from .bijection import make_rng, sample_uniform_map
from .constellations import induction_check, multitype_genus, ps_count_m3, qc_count
from .maps import DomainError, StructureError
from .oracle import CapExceeded
from .stanley import character_eval, stanley_F


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def parse_parts(text):
    """``"3,2,1"`` -> ``(3, 2, 1)``; parts must be positive."""
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not parts or min(parts) < 1:
        raise argparse.ArgumentTypeError(f"parts must be positive integers, got {text!r}")
    return parts


def parse_partition(text):
    parts = parse_parts(text)
    if list(parts) != sorted(parts, reverse=True):
        raise argparse.ArgumentTypeError(f"partition must be weakly decreasing, got {text!r}")
    return parts


def nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def fmt(value):
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


# --- count -------------------------------------------------------------------

# formula name -> (argument names, evaluator)
FORMULAS = {
    "catalan": (("n",), lambda a: C.catalan(a["n"])),
    "double-factorial": (("n",), lambda a: C.double_factorial_odd(a["n"])),
    "cperm": (("genus", "n"), lambda a: C.cperm_count(a["genus"], a["n"])),
    "lehman-walsh": (("genus", "edges"), lambda a: C.epsilon_lw(a["genus"], a["edges"])),
    "harer-zagier": (("genus", "edges"), lambda a: C.epsilon_hz(a["genus"], a["edges"])),
    "colored": (("colors", "edges"), lambda a: C.colored_count(a["colors"], a["edges"])),
    "jackson": (("black_colors", "white_colors", "edges"),
                lambda a: C.jackson_count(a["black_colors"], a["white_colors"], a["edges"])),
    "goupil-schaeffer": (("I", "J"), lambda a: C.goupil_schaeffer(a["I"], a["J"])),
    "bi": (("lam", "mu"), lambda a: C.bi_count(a["lam"], a["mu"])),
    "morales-vassilieva": (("I", "J"), lambda a: C.morales_vassilieva(a["I"], a["J"])),
    "covered": (("g1", "g2", "edges"), lambda a: C.covered_count(a["g1"], a["g2"], a["edges"])),
    "covered-total": (("genus", "edges"), lambda a: C.covered_total(a["genus"], a["edges"])),
    "bip": (("genus", "edges"), lambda a: C.bip_count(a["genus"], a["edges"])),
}

_ARG_TYPES = {"I": parse_parts, "J": parse_parts, "lam": parse_partition, "mu": parse_partition}


def _add_count(sub):
    p = sub.add_parser("count", help="evaluate a counting formula")
    fsub = p.add_subparsers(dest="formula", metavar="FORMULA", parser_class=_Parser)
    fsub.required = True
    for name, (args, _) in FORMULAS.items():
        fp = fsub.add_parser(name)
        for a in args:
            fp.add_argument("--" + a.replace("_", "-"), dest=a, required=True,
                            type=_ARG_TYPES.get(a, nonneg))
        fp.add_argument("--json", action="store_true", help="emit a JSON object")


def cmd_count(ns, out):
    args, fn = FORMULAS[ns.formula]
    vals = {a: getattr(ns, a) for a in args}
    value = fn(vals)
    if ns.json:
        shown = {a: (list(v) if isinstance(v, tuple) else v) for a, v in vals.items()}
        out.write(json.dumps({"formula": ns.formula, "args": shown, "value": fmt(value)}) + "\n")
    else:
        out.write(fmt(value) + "\n")
    return 0


# --- verify ------------------------------------------------------------------

def _add_verify(sub):
    from .verify import CHECKS, STATED
    p = sub.add_parser("verify", help="cross-check formulas against brute force")
    p.add_argument("what", choices=["all"] + list(CHECKS) + list(STATED),
                   help="check name or 'all'")
    p.add_argument("--max-edges", type=nonneg, default=4)


def cmd_verify(ns, out):
    from .verify import STATED, run_checks, run_stated
    if ns.what == "all":
        results, stated = run_checks(ns.max_edges), run_stated(ns.max_edges)
    elif ns.what in STATED:
        results, stated = [], run_checks(ns.max_edges, [ns.what])
    else:
        results, stated = run_checks(ns.max_edges, [ns.what]), []
    width = max(len(r.name) for r in results + stated)
    for r in results:
        out.write(f"{r.name:<{width}}  {'PASS' if r.ok else 'FAIL'}  {r.detail}\n")
    failed = sum(not r.ok for r in results)
    if results:
        out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    if stated:
        out.write("formulas as stated (informational, known to differ):\n")
        for r in stated:
            out.write(f"{r.name:<{width}}  {'AGREES' if r.ok else 'DIFFERS'}  {r.detail}\n")
    return 2 if failed else 0


# --- sample ------------------------------------------------------------------

def _add_sample(sub):
    p = sub.add_parser("sample", help="uniform random unicellular maps as JSON lines")
    p.add_argument("--genus", type=nonneg, required=True)
    p.add_argument("--edges", type=nonneg, required=True)
    p.add_argument("--count", type=nonneg, default=1)
    p.add_argument("--seed", type=int, default=0)


def cmd_sample(ns, out):
    rng = make_rng(ns.seed)
    for _ in range(ns.count):
        out.write(sample_uniform_map(ns.genus, ns.edges, rng).to_json() + "\n")
    return 0


# --- stanley -----------------------------------------------------------------

def _parse_eval(text):
    try:
        ps, qs = text.split(";")
        p, q = parse_parts(ps), parse_parts(qs)
    except (ValueError, argparse.ArgumentTypeError):
        raise argparse.ArgumentTypeError(f"expected 'p1,..,pr;q1,..,qr', got {text!r}")
    if len(p) != len(q):
        raise argparse.ArgumentTypeError("p and q must have the same length")
    return p, q


def _add_stanley(sub):
    p = sub.add_parser("stanley", help="Stanley character polynomial F_n")
    p.add_argument("--n", type=nonneg, required=True)
    p.add_argument("--vars", type=nonneg, required=True, help="number r of p and q variables")
    p.add_argument("--eval", type=_parse_eval, default=None,
                   help="evaluate the normalised character at 'p1,..;q1,..'")


def cmd_stanley(ns, out):
    if ns.n < 1 or ns.vars < 1:
        raise DomainError("need --n >= 1 and --vars >= 1")
    poly = stanley_F(ns.n, ns.vars)
    if ns.eval is None:
        out.write(str(poly) + "\n")
        return 0
    p, q = ns.eval
    if len(p) > ns.vars:
        raise DomainError("--eval uses more variables than --vars")
    out.write(fmt(character_eval(ns.n, p, q, poly)) + "\n")
    return 0


# --- constellation -----------------------------------------------------------

def _add_constellation(sub):
    p = sub.add_parser("constellation", help="3-constellation formulas")
    p.add_argument("kind", choices=["ps3", "qc", "induction"])
    for i in (1, 2, 3):
        p.add_argument(f"--lambda{i}", type=parse_partition, required=True)
    p.add_argument("--corrected", action="store_true",
                   help="induction only: use the n^2(n-1)/2 square-vertex term")


def cmd_constellation(ns, out):
    lams = (ns.lambda1, ns.lambda2, ns.lambda3)
    if ns.kind == "ps3":
        out.write(fmt(ps_count_m3(*lams)) + "\n")
        return 0
    if ns.kind == "qc":
        out.write(fmt(qc_count(*lams)) + "\n")
        return 0
    n, _ = multitype_genus(*lams)
    ok, lhs, rhs = induction_check(*(len(x) for x in lams), n, corrected=ns.corrected)
    out.write(f"lhs {fmt(lhs)}\nrhs {fmt(rhs)}\n{'holds' if ok else 'fails'}\n")
    return 0 if ok else 2


# --- dist --------------------------------------------------------------------

def _add_dist(sub):
    p = sub.add_parser("dist", help="white genus distribution as CSV")
    p.add_argument("--genus", type=nonneg, required=True)
    p.add_argument("--edges", type=parse_parts, required=True,
                   help="one or more edge counts, comma separated")


def cmd_dist(ns, out):
    out.write("edges,g1,probability,binomial,total_variation\n")
    for n in ns.edges:
        dist = C.white_genus_distribution(ns.genus, n)
        binom = C.binomial_half(ns.genus)
        tv = C.total_variation(dist, binom)
        for g1, (p, b) in enumerate(zip(dist, binom)):
            out.write(f"{n},{g1},{fmt(p)},{fmt(b)},{fmt(tv)}\n")
    return 0


# --- entry points ------------------------------------------------------------

COMMANDS = {
    "count": cmd_count, "verify": cmd_verify, "sample": cmd_sample,
    "stanley": cmd_stanley, "constellation": cmd_constellation, "dist": cmd_dist,
}


def build_parser():
    parser = _Parser(prog="unimap", description="Unicellular maps: counting, bijections, sampling.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    for add in (_add_count, _add_verify, _add_sample, _add_stanley, _add_constellation, _add_dist):
        add(sub)
    return parser


def run(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
        return COMMANDS[ns.command](ns, out)
    except UsageError as exc:
        err.write(str(exc))
        return 1
    except (DomainError, StructureError, CapExceeded, ValueError) as exc:
        err.write(f"unimap: error: {exc}\n")
        return 1


def main(argv=None):
    try:
        code = run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # --help
        code = exc.code if isinstance(exc.code, int) else 0
    sys.exit(code)


if __name__ == "__main__":
    main()
