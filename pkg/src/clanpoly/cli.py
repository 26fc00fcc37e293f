"""Command-line surface over the clan polynomial toolkit.

Every command writes a deterministic report to stdout (sorted, no
timestamps); timings go to stderr.  Exit codes: 0 clean, 1 a verify
suite found violations, 2 usage problems, 3 a computation hit its
resource budget (partial report emitted).
"""

import argparse
import os
import sys
import time

from . import grobner, ideals, perms, tableaux, upsilon
from .clans import (WeakOrderGraph, closure_leq, enumerate_clans,
                    enumerate_matchless, parse_clan)
from .golden22 import GOLDEN_H_XY
from .grobner import BudgetExceeded
from .poly import Poly
from .schubert import expand_single_trailing

MAX_N = 8

FLAVOR_NAMES = {
    "coh": "H_XY",
    "coh-single": "H_X",
    "K": "K_XY",
    "K-single": "K_X",
    "beta": "beta",
}

SUITES = ("appendix", "self-consistency", "symmetry", "degrees",
          "staircase", "multfree", "groebner-sweep", "hpoly-sweep")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _infer_pq(text):
    """Clan strings determine (p, q): arcs count toward both sides."""
    pluses = text.count("+")
    minuses = text.count("-")
    rest = len(text) - pluses - minuses
    if rest % 2:
        raise UsageError("unbalanced arc labels in %r" % (text,))
    return pluses + rest // 2, minuses + rest // 2


def _clan_from(args, attr="clan"):
    text = getattr(args, attr)
    if text is None:
        raise UsageError("missing --%s" % attr.replace("_", "-"))
    if args.p is not None and args.q is not None:
        p, q = args.p, args.q
    else:
        p, q = _infer_pq(text)
    _check_cap(p, q)
    try:
        return parse_clan(text, p, q)
    except ValueError as e:
        raise UsageError(str(e))


def _check_cap(p, q):
    if p < 1 or q < 1:
        raise UsageError("p and q must be positive")
    if p + q > MAX_N:
        raise UsageError("p+q=%d exceeds the cap (%d)" % (p + q, MAX_N))


def _pq_from(args):
    if args.p is None or args.q is None:
        raise UsageError("this command needs --p and --q")
    _check_cap(args.p, args.q)
    return args.p, args.q


def _env_int(name):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    return int(raw)


def _budget_from(args):
    budget = {}
    pairs = args.budget_max_pairs
    if pairs is None:
        pairs = _env_int("CLANPOLY_BUDGET_MAX_PAIRS")
    if pairs is not None:
        budget["max_pairs"] = pairs
    seconds = args.budget_max_seconds
    if seconds is None:
        env = os.environ.get("CLANPOLY_BUDGET_MAX_SECONDS")
        seconds = float(env) if env else None
    if seconds is not None:
        budget["max_seconds"] = seconds
    table = args.budget_max_table
    if table is None:
        table = _env_int("CLANPOLY_BUDGET_MAX_TABLE")
    if table is not None:
        budget["max_table"] = table
    return budget or None


class Writer:
    """Text lines or TSV rows, chosen once per run."""

    def __init__(self, fmt, columns):
        self.fmt = fmt
        self.columns = columns
        self.started = False

    def row(self, cells, text=None):
        if self.fmt == "tsv":
            if not self.started:
                print("\t".join(self.columns))
                self.started = True
            print("\t".join(str(c) for c in cells))
        else:
            print(text if text is not None else
                  " ".join(str(c) for c in cells))

    def plain(self, text):
        """Summary lines; skipped in TSV mode to keep the table clean."""
        if self.fmt != "tsv":
            print(text)


def _render_qpoly(coeffs):
    pieces = []
    for d, c in enumerate(coeffs):
        if not c:
            continue
        if d == 0:
            pieces.append(str(c))
        else:
            power = "q" if d == 1 else "q^%d" % d
            pieces.append(power if c == 1 else "%d*%s" % (c, power))
    return " + ".join(pieces) if pieces else "0"


def _clans_sorted(p, q):
    return sorted(enumerate_clans(p, q), key=str)


# -- plain commands ----------------------------------------------------

def cmd_clans(args):
    p, q = _pq_from(args)
    w = Writer(args.format, ("clan", "length", "dimension", "matchless"))
    for g in _clans_sorted(p, q):
        w.row((g, g.length(), g.dimension(),
               "yes" if g.is_matchless() else "no"),
              text=str(g))
    return EXIT_OK


def cmd_weak_order(args):
    p, q = _pq_from(args)
    graph = WeakOrderGraph(p, q)
    w = Writer(args.format, ("from", "position", "to"))
    for (lo, i, hi) in graph.edges:
        w.row((lo, i, hi), text="%s --%d--> %s" % (lo, i, hi))
    return EXIT_OK


def cmd_upsilon(args):
    g = _clan_from(args)
    flavor = FLAVOR_NAMES[args.flavor]
    f = upsilon.specialize(g, flavor)
    w = Writer(args.format, ("clan", "flavor", "polynomial"))
    w.row((g, args.flavor, f), text=str(f))
    return EXIT_OK


def cmd_expand(args):
    g = _clan_from(args)
    f = upsilon.specialize(g, "H_X")
    coeffs = expand_single_trailing(f)
    w = Writer(args.format, ("perm", "coefficient"))
    for wperm in sorted(coeffs, key=lambda t: (len(t), t)):
        w.row((perms.render_perm(wperm), coeffs[wperm]))
    return EXIT_OK


def _presentation_from(args):
    g = _clan_from(args)
    if args.patch_clan is not None:
        b = _clan_from(args, "patch_clan")
        return g, ideals.patch_ideal(g, b)
    return g, ideals.korbit_ideal(g)


def cmd_ideal(args):
    _g, pres = _presentation_from(args)
    lines = pres.generator_lines()
    w = Writer(args.format, ("generator",))
    if not lines:
        w.row(("0",))
    for line in lines:
        w.row((line,))
    if args.cas:
        with open(args.cas, "w") as f:
            f.write(pres.cas_script())
        sys.stderr.write("CAS script written to %s\n" % args.cas)
    return EXIT_OK


def _order_for(name, n, p):
    if name == "pq-lex":
        return grobner.pq_lex_order(n, p)
    if name == "grevlex":
        return grobner.grevlex_order(n * n)
    raise UsageError("unknown order %r" % (name,))


def cmd_groebner(args):
    g = _clan_from(args)
    budget = _budget_from(args)
    order = _order_for(args.order, g.n, g.p)
    pres = ideals.korbit_ideal(g)
    w = Writer(args.format, ("key", "value"))
    w.row(("clan", g), text="clan: %s" % g)
    w.row(("order", args.order), text="order: %s" % args.order)
    w.row(("generators", len(pres.generators)),
          text="generators: %d" % len(pres.generators))
    if pres.generators:
        already = grobner.is_groebner_already(pres.generators, order, budget)
        init = grobner.initial_ideal(pres.generators, order, budget,
                                     assume_groebner=already)
    else:
        already = True
        init = grobner.MonomialIdeal(grobner.matrix_ring(g.n), [])
    w.row(("already_groebner", "yes" if already else "no"),
          text="already_groebner: %s" % ("yes" if already else "no"))
    names = ", ".join("*".join(t) for t in init.generator_names()) or "0"
    w.row(("initial_ideal", names), text="initial_ideal: %s" % names)
    sqf = init.is_squarefree()
    w.row(("squarefree", "yes" if sqf else "no"),
          text="squarefree: %s" % ("yes" if sqf else "no"))
    if sqf:
        comps = " | ".join(",".join(c) for c in init.minimal_primes())
        w.row(("components", comps or "none"),
              text="components: %s" % (comps or "none"))
    report = grobner.multidegree_report(init, g.n, budget)
    if report["histogram"] is not None:
        hist = " ".join("%d:%d" % (k, v)
                        for k, v in sorted(report["histogram"].items()))
        w.row(("codimension_histogram", hist),
              text="codimension_histogram: %s" % hist)
    w.row(("multidegree", report["poly"]),
          text="multidegree: %s" % report["poly"])
    kp = grobner.k_polynomial(init, g.n, budget=budget)
    w.row(("k_polynomial", kp), text="k_polynomial: %s" % kp)
    if args.cas:
        with open(args.cas, "w") as f:
            f.write(pres.cas_script())
        sys.stderr.write("CAS script written to %s\n" % args.cas)
    return EXIT_OK


def cmd_hpoly(args):
    g = _clan_from(args)
    if args.patch_clan is None:
        raise UsageError("hpoly needs --patch-clan for the base point")
    b = _clan_from(args, "patch_clan")
    budget = _budget_from(args)
    try:
        h = grobner.h_polynomial(g, b, budget)
    except ValueError as e:
        raise UsageError(str(e))
    w = Writer(args.format, ("clan", "base", "hpoly", "multiplicity"))
    w.row((g, b, _render_qpoly(h), sum(h)), text=_render_qpoly(h))
    return EXIT_OK


# -- verify suites -----------------------------------------------------

def _suite_appendix(p, q, w, budget):
    if (p, q) != (2, 2):
        raise UsageError("the appendix suite is defined for --p 2 --q 2")
    matches = 0
    total = 0
    for g in _clans_sorted(2, 2):
        total += 1
        got = str(upsilon.specialize(g, "H_XY"))
        good = got == GOLDEN_H_XY[str(g)]
        matches += good
        w.row((g, "ok" if good else "mismatch"),
              text="%s %s" % (g, "OK" if good else "MISMATCH"))
    w.plain("%d/%d matches" % (matches, total))
    return total - matches


def _suite_self_consistency(p, q, w, budget):
    def on_edge(lo, i, hi, status):
        w.row((lo, i, hi, status),
              text="%s --%d--> %s %s" % (lo, i, hi, status))

    report = upsilon.verify_self_consistency(p, q, on_edge=on_edge)
    w.plain("clans=%d edges=%d checked=%d violations=%d"
            % (report["clans"], report["edges"], report["checked"],
               len(report["violations"])))
    return len(report["violations"])


def _suite_symmetry(p, q, w, budget):
    def on_clan(clan, neg, status):
        w.row((clan, neg, status),
              text="%s ~ %s %s" % (clan, neg, status))

    report = upsilon.check_symmetry(p, q, on_clan=on_clan)
    w.plain("clans=%d violations=%d"
            % (report["clans"], len(report["violations"])))
    return len(report["violations"])


def _suite_degrees(p, q, w, budget):
    table = upsilon.flavor_sweep(p, q, "H_X")
    bad = 0
    for g in sorted(table, key=str):
        f = table[g]
        expected = p * q - g.length()
        good = f.deg_x() == expected and not f.has_negative_coeff()
        bad += not good
        w.row((g, f.deg_x(), expected, "ok" if good else "violation"),
              text="%s deg=%d expected=%d %s"
              % (g, f.deg_x(), expected, "ok" if good else "violation"))
    w.plain("clans=%d violations=%d" % (len(table), bad))
    return bad


def _suite_staircase(p, q, w, budget):
    bad = 0
    taus = sorted(enumerate_matchless(p, q), key=str)
    for tau in taus:
        good = upsilon.upsilon_matchless(tau).within_staircase()
        bad += not good
        w.row((tau, "ok" if good else "violation"),
              text="%s %s" % (tau, "ok" if good else "violation"))
    w.plain("matchless=%d violations=%d" % (len(taus), bad))
    return bad


def _suite_multfree(p, q, w, budget):
    table = upsilon.flavor_sweep(p, q, "H_X")
    bad = 0
    for g in sorted(table, key=str):
        coeffs = expand_single_trailing(table[g])
        good = all(c in (0, 1) for c in coeffs.values())
        bad += not good
        w.row((g, len(coeffs), "ok" if good else "violation"),
              text="%s terms=%d %s"
              % (g, len(coeffs), "ok" if good else "violation"))
    w.plain("clans=%d violations=%d" % (len(table), bad))
    return bad


def _suite_groebner_sweep(p, q, w, budget):
    """Per clan: raw generators already Groebner?  squarefree leads?
    For p+q <= 5 the initial ideal's multidegree and K-polynomial are
    also compared against the two-alphabet polynomials."""
    n = p + q
    order = grobner.pq_lex_order(n, p)
    compare = n <= 5
    if compare:
        sweeps = upsilon.flavor_sweep_multi(p, q, ("H_XY", "K_XY"))
        hxy = sweeps["H_XY"]
        kxy = sweeps["K_XY"]
    violations = 0
    gb_failures = 0
    for g in _clans_sorted(p, q):
        pres = ideals.korbit_ideal(g)
        if not pres.generators:
            w.row((g, "empty", "-", "-", "-", "ok"),
                  text="%s empty-ideal ok" % g)
            continue
        already = grobner.is_groebner_already(pres.generators, order, budget)
        if not already:
            gb_failures += 1
            # only non-crossing clans are guaranteed to pass; a crossing
            # clan may legitimately fail
            if g.is_noncrossing():
                violations += 1
        if compare:
            init = grobner.initial_ideal(pres.generators, order, budget,
                                         assume_groebner=already)
            sqf = init.is_squarefree()
            md_ok = grobner.multidegree_report(init, n, budget)["poly"] == \
                hxy[g]
            k_ok = grobner.k_polynomial(init, n, budget=budget) == kxy[g]
            good = (already or not g.is_noncrossing()) and md_ok and k_ok \
                and (sqf or not g.is_noncrossing())
            violations += not (md_ok and k_ok)
            violations += g.is_noncrossing() and not sqf
            w.row((g, "yes" if already else "no", "yes" if sqf else "no",
                   "ok" if md_ok else "mismatch",
                   "ok" if k_ok else "mismatch",
                   "ok" if good else "violation"),
                  text="%s gb=%s sqfree=%s md=%s k=%s %s"
                  % (g, "yes" if already else "no", "yes" if sqf else "no",
                     "ok" if md_ok else "mismatch",
                     "ok" if k_ok else "mismatch",
                     "ok" if good else "violation"))
        else:
            good = already or not g.is_noncrossing()
            w.row((g, "yes" if already else "no", "-", "-", "-",
                   "ok" if good else "violation"),
                  text="%s gb=%s %s"
                  % (g, "yes" if already else "no",
                     "ok" if good else "violation"))
    w.plain("clans=%d gb_failures=%d violations=%d"
            % (len(_clans_sorted(p, q)), gb_failures, violations))
    return violations


def _suite_hpoly_sweep(p, q, w, budget):
    violations = 0
    pairs = 0
    clans = _clans_sorted(p, q)
    for g in clans:
        for b in clans:
            if not closure_leq(b, g):
                continue
            pairs += 1
            h = grobner.h_polynomial(g, b, budget)
            good = h[0] == 1 and all(c >= 0 for c in h)
            violations += not good
            w.row((g, b, _render_qpoly(h), "ok" if good else "violation"),
                  text="%s at %s H=%s %s"
                  % (g, b, _render_qpoly(h), "ok" if good else "violation"))
    w.plain("pairs=%d violations=%d" % (pairs, violations))
    return violations


_SUITE_FUNCS = {
    "appendix": (_suite_appendix, ("clan", "status")),
    "self-consistency": (_suite_self_consistency,
                         ("from", "position", "to", "status")),
    "symmetry": (_suite_symmetry, ("clan", "negated", "status")),
    "degrees": (_suite_degrees, ("clan", "degree", "expected", "status")),
    "staircase": (_suite_staircase, ("clan", "status")),
    "multfree": (_suite_multfree, ("clan", "terms", "status")),
    "groebner-sweep": (_suite_groebner_sweep,
                       ("clan", "already_groebner", "squarefree",
                        "multidegree", "k_polynomial", "status")),
    "hpoly-sweep": (_suite_hpoly_sweep,
                    ("clan", "base", "hpoly", "status")),
}


def cmd_verify(args):
    p, q = _pq_from(args)
    func, columns = _SUITE_FUNCS[args.suite]
    w = Writer(args.format, columns)
    budget = _budget_from(args)
    t0 = time.time()
    try:
        bad = func(p, q, w, budget)
    except BudgetExceeded as e:
        print("budget exceeded: %s" % e)
        sys.stderr.write("suite %s stopped after %.1fs\n"
                         % (args.suite, time.time() - t0))
        return EXIT_BUDGET
    sys.stderr.write("suite %s finished in %.1fs\n"
                     % (args.suite, time.time() - t0))
    return EXIT_VIOLATION if bad else EXIT_OK


# -- entry point -------------------------------------------------------

def _add_common(sub):
    sub.add_argument("--p", type=int, default=None)
    sub.add_argument("--q", type=int, default=None)
    sub.add_argument("--clan", default=None)
    sub.add_argument("--patch-clan", dest="patch_clan", default=None)
    sub.add_argument("--flavor", choices=sorted(FLAVOR_NAMES),
                     default="coh")
    sub.add_argument("--order", choices=("pq-lex", "grevlex"),
                     default="pq-lex")
    sub.add_argument("--format", choices=("text", "tsv"), default="text")
    sub.add_argument("--cas", default=None,
                     help="write a CAS verification script to this path")
    sub.add_argument("--budget-max-pairs", type=int, default=None)
    sub.add_argument("--budget-max-seconds", type=float, default=None)
    sub.add_argument("--budget-max-table", type=int, default=None)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="clanpoly",
        description="polynomials and ideals attached to two-block clans")
    subs = parser.add_subparsers(dest="command", required=True)
    handlers = {
        "clans": cmd_clans,
        "weak-order": cmd_weak_order,
        "upsilon": cmd_upsilon,
        "expand": cmd_expand,
        "ideal": cmd_ideal,
        "groebner": cmd_groebner,
        "hpoly": cmd_hpoly,
    }
    for name in handlers:
        sub = subs.add_parser(name)
        _add_common(sub)
        sub.set_defaults(func=handlers[name])
    verify = subs.add_parser("verify")
    verify.add_argument("suite", choices=SUITES)
    _add_common(verify)
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_USAGE
    except BudgetExceeded as e:
        sys.stderr.write("budget exceeded: %s\n" % e)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
