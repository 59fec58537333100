"""Command-line entry point.

Every report is line-oriented ``key=value`` text on stdout; diagnostics go
to stderr.  Exit status: 0 success or pass, 1 not determined or fail, 2
usage, scope and hypothesis errors.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence, TextIO

from dqslab.cli_io import cache as C
from dqslab.cli_io.graph6 import encode_graph6
from dqslab.cli_io.textforms import parse_params, resolve_graph
from dqslab.cospectral_lab.hunt import hunt_mates
from dqslab.cospectral_lab.registry import registry_lookup
from dqslab.cospectral_lab.theorems import (
    THEOREMS,
    HypothesisViolation,
    TheoremReport,
    load_table,
    run_row,
    verify_theorem,
)
from dqslab.enumerate.generate import EXHAUSTIVE_CAP, ScopeError, generate
from dqslab.exact_spectra.charpoly import KINDS, charpoly, spectrum_text
from dqslab.exact_spectra.invariants import q_invariants

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_jobs() -> int:
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dqslab", description="Exact spectra and cospectral-mate search for small graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("family", help="build a graph and print its graph6 and counts")
    s.add_argument("spec", help="family descriptor like lollipop(11,6), or any graph expression")

    s = sub.add_parser("spectrum", help="characteristic polynomial and root multiset")
    s.add_argument("graph")
    s.add_argument("--matrix", choices=KINDS, default="Q")

    s = sub.add_parser("invariants", help="Q-spectral invariants as key=value lines")
    s.add_argument("graph")

    s = sub.add_parser("enumerate", help="all isomorphism classes of order n")
    s.add_argument("n", type=int)
    s.add_argument("--edges", type=int, default=None)
    s.add_argument("--out", default=None, help="write a cache file instead of graph6 lines")
    s.add_argument("--cache", action="store_true",
                   help=f"write into the cache directory (--cache-dir or ${C.CACHE_ENV})")
    s.add_argument("--cache-dir", default=None)
    s.add_argument("--jobs", type=int, default=_default_jobs())

    s = sub.add_parser("hunt", help="search for cospectral mates at the target's order")
    s.add_argument("graph")
    s.add_argument("--matrix", choices=KINDS, default="Q")
    s.add_argument("--jobs", type=int, default=_default_jobs())
    s.add_argument("--cache-dir", default=None, help=f"read candidates from here (default ${C.CACHE_ENV})")
    s.add_argument("--no-prefilter", action="store_true")

    s = sub.add_parser("verify", help="check a theorem instance or the stored instance table")
    s.add_argument("--theorem", choices=THEOREMS)
    s.add_argument("--params", default=None, help="e.g. G=K4,r=1")
    s.add_argument("--probe", action="store_true", help="run the conclusion even if hypotheses fail")
    s.add_argument("--table", action="store_true")
    s.add_argument("--max-order", type=int, default=9)
    s.add_argument("--jobs", type=int, default=_default_jobs())

    s = sub.add_parser("registry", help="known determined families containing the graph")
    s.add_argument("graph")

    s = sub.add_parser("cache-check", help="recompute records of a cache file")
    s.add_argument("path")
    s.add_argument("--sample", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    return p


def _cmd_family(a, out):
    g = resolve_graph(a.spec)
    print(f"spec={a.spec}", file=out)
    print(f"graph6={encode_graph6(g)}", file=out)
    print(f"n={g.n} m={g.m}", file=out)
    return EXIT_OK


def _cmd_spectrum(a, out):
    g = resolve_graph(a.graph)
    p = charpoly(g, a.matrix)
    print(f"graph6={encode_graph6(g)}", file=out)
    print(f"matrix={a.matrix}", file=out)
    print(f"poly={p.text()}", file=out)
    print(f"spectrum={spectrum_text(p)}", file=out)
    return EXIT_OK


def _cmd_invariants(a, out):
    g = resolve_graph(a.graph)
    print(f"graph6={encode_graph6(g)}", file=out)
    for ln in q_invariants(g).as_lines():
        print(ln, file=out)
    return EXIT_OK


def _cmd_enumerate(a, out):
    if a.n > EXHAUSTIVE_CAP:
        raise ScopeError(f"order {a.n} exceeds the exhaustive cap {EXHAUSTIVE_CAP}")
    path = a.out
    if a.cache:
        d = a.cache_dir or C.default_dir()
        if d is None:
            raise UsageError(f"--cache needs --cache-dir or ${C.CACHE_ENV}")
        path = os.path.join(d, C.cache_name(a.n, a.edges))
    graphs = generate(a.n, a.edges, jobs=a.jobs)
    if path is None:
        count = 0
        for g in graphs:
            print(encode_graph6(g), file=out)
            count += 1
        print(f"count={count}", file=sys.stderr)
    else:
        count = C.write_cache(path, graphs, a.n, a.edges)
        print(f"path={path}", file=out)
        print(f"count={count}", file=out)
    return EXIT_OK


def _cmd_hunt(a, out):
    g = resolve_graph(a.graph)
    kw = dict(use_prefilter=not a.no_prefilter, jobs=a.jobs)
    found = C.find_cache(a.cache_dir or C.default_dir(), g.n, g.m)
    if found is not None:
        _, recs = C.read_cache(found)
        kw["candidates"] = [r.graph() for r in recs if r.m == g.m]
    elif g.n > EXHAUSTIVE_CAP:
        raise ScopeError(f"order {g.n} exceeds the exhaustive cap {EXHAUSTIVE_CAP}")
    rep = hunt_mates(g, a.matrix, **kw)
    print(f"target={rep.target_graph6}", file=out)
    print(f"matrix={a.matrix}", file=out)
    print(f"scope={rep.scope}", file=out)
    print(f"examined={rep.candidates_examined}", file=out)
    print(f"prefilter_survivors={rep.prefilter_survivors}", file=out)
    for s in rep.mate_graph6():
        print(f"mate={s}", file=out)
    print(f"mates={len(rep.mates)}", file=out)
    print(f"verdict={'not-determined' if rep.mates else 'determined-in-scope'}", file=out)
    return EXIT_FAIL if rep.mates else EXIT_OK


def _print_report(rep: TheoremReport, out: TextIO):
    print(f"theorem={rep.theorem}", file=out)
    if rep.instance is not None:
        print(f"instance={encode_graph6(rep.instance)} n={rep.instance.n}", file=out)
    for c in rep.hypotheses:
        print(f"hypothesis={c.name} ok={'yes' if c.ok else 'no'}" + (f" detail={c.detail}" if c.detail else ""),
              file=out)
    for c in rep.conclusions:
        print(f"conclusion={c.name} ok={'yes' if c.ok else 'no'}" + (f" detail={c.detail}" if c.detail else ""),
              file=out)
    for v in rep.verdicts:
        for w in v.witnesses:
            print(f"witness={encode_graph6(w)} target={encode_graph6(v.target)} matrix={v.kind}", file=out)


def _cmd_verify(a, out):
    if a.table:
        worst = EXIT_OK
        for row in load_table():
            if row.order > a.max_order:
                print(f"row={row.theorem} params={row.params} status=skipped order={row.order}", file=out)
                continue
            ok, _ = run_row(row, parse_params, jobs=a.jobs)
            print(f"row={row.theorem} params={row.params} expect={row.expect} "
                  f"status={'ok' if ok else 'FAIL'}", file=out)
            if not ok:
                worst = EXIT_FAIL
        return worst
    if not a.theorem or a.params is None:
        raise UsageError("verify needs --theorem and --params, or --table")
    params = parse_params(a.params)
    try:
        rep = verify_theorem(a.theorem, params, probe=a.probe, jobs=a.jobs)
    except HypothesisViolation as e:
        _print_report(e.report, out)
        print("result=rejected", file=out)
        raise
    _print_report(rep, out)
    print(f"result={'pass' if rep.passed else 'fail'}", file=out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _cmd_registry(a, out):
    g = resolve_graph(a.graph)
    matches = registry_lookup(g)
    print(f"graph6={encode_graph6(g)}", file=out)
    for mt in matches:
        print(f"claim={mt.claim.key} instance={mt.instance}", file=out)
    print(f"matches={len(matches)}", file=out)
    return EXIT_OK if matches else EXIT_FAIL


def _cmd_cache_check(a, out):
    meta, recs = C.read_cache(a.path)
    bad = C.validate(recs, a.sample, a.seed)
    checked = len(recs) if a.sample is None else min(a.sample, len(recs))
    print(f"records={len(recs)} checked={checked} mismatches={len(bad)}", file=out)
    for s in bad:
        print(f"mismatch={s}", file=out)
    return EXIT_FAIL if bad else EXIT_OK


COMMANDS = {
    "family": _cmd_family,
    "spectrum": _cmd_spectrum,
    "invariants": _cmd_invariants,
    "enumerate": _cmd_enumerate,
    "hunt": _cmd_hunt,
    "verify": _cmd_verify,
    "registry": _cmd_registry,
    "cache-check": _cmd_cache_check,
}


def run_cli(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
            err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        a = build_parser().parse_args(argv)
        return COMMANDS[a.command](a, out)
    except UsageError as e:
        print(f"usage error: {e}", file=err)
    except HypothesisViolation as e:
        print(f"hypothesis error: {e}", file=err)
    except ScopeError as e:
        print(f"scope error: {e}", file=err)
    except (ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=err)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
