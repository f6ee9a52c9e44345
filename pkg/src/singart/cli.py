"""Command-line entry point.

Decision verbs print ``true``/``false`` and exit 0/1; scans exit 1 when they
find a counterexample; usage and parse errors exit 2.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .desing import birman_scan, eta, eta_tilde
from .graph import DefiningGraph, GraphError, all_graphs, parse_graph
from .products import Kind
from .scans import orbit_scan
from .singular import TAU, SingularMonoid, WordError
from .traces import lemma42_scan

# "-a" would otherwise be read as an option flag; a leading space keeps
# argparse from doing that and is harmless to the word parser.
_BARE_WORD = re.compile(r"-[A-Za-z0-9_]+\Z")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="singart", description=__doc__.splitlines()[0])
    p.add_argument("--graph", required=True, type=Path, help="graph file")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", help="normal form of a word")
    s.add_argument("word")
    s = sub.add_parser("eq", help="do two words give the same element")
    s.add_argument("w1")
    s.add_argument("w2")
    s = sub.add_parser("commute", help="do two words commute")
    s.add_argument("w1")
    s.add_argument("w2")
    for name in ("theta", "ord", "eta"):
        s = sub.add_parser(name)
        s.add_argument("word")
    s = sub.add_parser("eta-trunc", help="series image of a word that may use !v")
    s.add_argument("--cutoff", type=int, required=True)
    s.add_argument("word")
    s = sub.add_parser("ribbon", help="is alpha sigma_s alpha^-1 == sigma_t")
    s.add_argument("--s", required=True)
    s.add_argument("--t", required=True)
    s.add_argument("word")
    s = sub.add_parser("frz", help="alpha gen_s^k == gen_t^k alpha")
    s.add_argument("--family", choices=("sigma", "tau"), required=True)
    s.add_argument("--s", required=True)
    s.add_argument("--t", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("word")
    s = sub.add_parser("birman-scan")
    s.add_argument("--max-len", type=int, required=True)
    s = sub.add_parser("nf-orbit-check")
    s.add_argument("--max-syll", type=int, required=True)
    s.add_argument("--max-exp", type=int, required=True)
    s.add_argument("--exhaustive", action="store_true", help="every weight assignment")
    s.add_argument("--all-graphs", action="store_true",
                   help="every edge pattern on the graph's vertex set")
    s = sub.add_parser("lemma42-scan")
    s.add_argument("--max-l", type=int, required=True)
    s.add_argument("--max-p", type=int, required=True)
    s.add_argument("--max-letters", type=int, default=4)
    return p


def _verdict(flag: bool) -> int:
    print("true" if flag else "false")
    return 0 if flag else 1


def _run(args, graph: DefiningGraph) -> int:
    M = SingularMonoid(graph)
    cmd = args.command
    if cmd == "normalize":
        word = M.parse(args.word)
        if any(k == TAU for k, _ in word):
            print(M.format(M.evaluate(word)))
        else:
            print(M.group.format(M.group_word(word)))
        return 0
    if cmd == "eq":
        return _verdict(M.equals(M.parse(args.w1), M.parse(args.w2)))
    if cmd == "commute":
        a, b = M.parse(args.w1), M.parse(args.w2)
        return _verdict(M.equals(a + b, b + a))
    if cmd == "theta":
        print(M.group.format(M.theta(M.evaluate(M.parse(args.word)))))
        return 0
    if cmd == "ord":
        print(M.ord(M.evaluate(M.parse(args.word))))
        return 0
    if cmd == "eta":
        print(eta(M, M.evaluate(M.parse(args.word))).format())
        return 0
    if cmd == "eta-trunc":
        print(eta_tilde(M, M.parse(args.word, extended=True), args.cutoff).format())
        return 0
    if cmd == "ribbon":
        return _verdict(M.is_ribbon(M.group_word(M.parse(args.word)), args.s, args.t))
    if cmd == "frz":
        return _verdict(M.frz_decide(args.family, M.parse(args.word), args.s, args.t, args.k))
    if cmd == "birman-scan":
        report = birman_scan(graph, args.max_len)
        print("\n".join(report.lines()))
        return 0 if report.ok else 1
    if cmd == "nf-orbit-check":
        graphs = list(all_graphs(graph.vertices)) if args.all_graphs else [graph]
        ok = True
        for kind in Kind:
            total, failures = 0, []
            for g in graphs:
                r = orbit_scan(g, kind, args.max_syll, args.max_exp, args.exhaustive)
                total += r.expressions
                failures += r.failures
            print(f"{kind.value}: expressions {total}, failures {len(failures)}")
            for f in failures[:20]:
                print(f"  {f}")
            ok = ok and not failures
        return 0 if ok else 1
    if cmd == "lemma42-scan":
        report = lemma42_scan(args.max_letters, args.max_l, args.max_p)
        print("\n".join(report.lines()))
        return 0 if report.ok else 1
    raise AssertionError(cmd)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = [" " + a if _BARE_WORD.match(a) and a != "-h" else a for a in argv]
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        graph = parse_graph(args.graph.read_text(encoding="utf-8"))
        return _run(args, graph)
    except OSError as exc:
        print(f"singart: cannot read graph: {exc}", file=sys.stderr)
    except (GraphError, WordError, ValueError) as exc:
        print(f"singart: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
