"""Command-line front end.

Exit codes: 0 when the verdict is true or a construction succeeded, 1 when a
verdict is false (the report carries the witness), 2 for unreadable or
structurally invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import corpus
from .bridge import (DegeneracyStructure, degeneracies_from_identities, extract_category,
                     extract_transitive_graph, nerve, nerve_extract_isomorphism,
                     search_degeneracies)
from .catstruct import ReflexiveTransitiveGraph, TransitiveGraph
from .completeness import check_completeness, check_univalence, synthesize_degeneracies
from .horns import check_segal, enumerate_horns, horn_fillers
from .interchange import (InputError, cat_to_dict, deg_to_dict, dumps, load_any, read_json,
                          deg_from_dict, sst_to_dict)
from .report import CheckReport, SegalkitError
from .sscore import SemiSimplicialSet, validate


def _load_sst(path: str, level: int | None) -> SemiSimplicialSet:
    """A semisimplicial set from an .sst.json file, or the nerve of a .cat.json file."""
    obj = load_any(path)
    if isinstance(obj, SemiSimplicialSet):
        return obj
    if isinstance(obj, TransitiveGraph):
        return nerve(obj, level or 3)
    raise InputError(f"{path}: expected a semisimplicial set or a category")


def _load_degeneracies(sst: SemiSimplicialSet, path: str | None) -> DegeneracyStructure:
    if path:
        return deg_from_dict(read_json(path))
    found = search_degeneracies(sst, level=min(sst.top_level - 1, 2), limit=2)
    if len(found) != 1:
        raise InputError(f"no degeneracies given and {len(found)} candidate identity assignments found;"
                         " pass --degeneracies")
    return found[0]


def _emit(args, payload: dict) -> None:
    text = dumps(payload)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(args, report: CheckReport) -> int:
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.summary())
    return 0 if report.verdict else 1


# -- subcommands -------------------------------------------------------------
def cmd_validate(args) -> int:
    sst = _load_sst(args.file, args.level)
    return _report(args, validate(sst))


def cmd_segal_check(args) -> int:
    sst = _load_sst(args.file, args.level)
    v = validate(sst)
    if not v:
        return _report(args, v)
    return _report(args, check_segal(sst, exhaustive=args.exhaustive))


def cmd_horn_count(args) -> int:
    sst = _load_sst(args.file, args.level)
    histogram: Counter = Counter()
    first_bad = None
    for h in enumerate_horns(sst, args.n, args.m):
        c = len(horn_fillers(sst, h))
        histogram[c] += 1
        if c != 1 and first_bad is None:
            first_bad = {"horn": h.to_dict(), "filler_count": c}
    counts = {"horns": sum(histogram.values()),
              "by_filler_count": {str(k): v for k, v in sorted(histogram.items())}}
    report = CheckReport(first_bad is None, f"horn-count {args.n},{args.m}", first_bad, counts,
                         law="every horn has exactly one filler")
    return _report(args, report)


def cmd_nerve(args) -> int:
    c = load_any(args.file)
    if not isinstance(c, TransitiveGraph):
        raise InputError(f"{args.file}: expected a category")
    _emit(args, sst_to_dict(nerve(c, args.level)))
    return 0


def cmd_extract(args) -> int:
    sst = _load_sst(args.file, None)
    if args.degeneracies:
        c = extract_category(sst, deg_from_dict(read_json(args.degeneracies)))
    else:
        c = extract_transitive_graph(sst)
    _emit(args, cat_to_dict(c))
    return 0


def cmd_roundtrip(args) -> int:
    c = load_any(args.file)
    if not isinstance(c, TransitiveGraph):
        raise InputError(f"{args.file}: expected a category")
    s = nerve(c, args.level)
    back = extract_transitive_graph(s)
    tables_equal = back.same_tables(TransitiveGraph(c.objects, c.hom, c.comp))
    iso = nerve_extract_isomorphism(s) is not None
    ids_equal = None
    if isinstance(c, ReflexiveTransitiveGraph) and args.level >= 2:
        d = degeneracies_from_identities(c, s)
        ids_equal = extract_category(s, d).ids == c.ids
    ok = tables_equal and iso and ids_equal is not False
    witness = None if ok else {"tables_equal": tables_equal, "nerve_isomorphic": iso, "ids_equal": ids_equal}
    counts = {"tables_equal": tables_equal, "nerve_isomorphic": iso, "ids_equal": ids_equal,
              "simplices": [s.count(k) for k in range(s.top_level + 1)]}
    return _report(args, CheckReport(ok, "roundtrip", witness, counts,
                                     law="extract(nerve(c)) = c and nerve(extract(s)) is isomorphic to s"))


def cmd_complete_check(args) -> int:
    sst = _load_sst(args.file, args.level)
    seg = check_segal(sst)
    if not seg:
        return _report(args, seg)
    return _report(args, check_completeness(sst, args.reading))


def cmd_univalence_check(args) -> int:
    sst = _load_sst(args.file, args.level)
    return _report(args, check_univalence(sst, _load_degeneracies(sst, args.degeneracies)))


def cmd_synthesize(args) -> int:
    sst = _load_sst(args.file, args.level)
    _emit(args, deg_to_dict(synthesize_degeneracies(sst, args.target)))
    return 0


def cmd_generate(args) -> int:
    p = args.params
    try:
        if args.kind == "chain-poset":
            c = corpus.chain_poset(int(p[0]))
        elif args.kind == "random-poset":
            c = corpus.random_poset(int(p[0]), float(p[1]) if len(p) > 1 else 0.3, args.seed)
        elif args.kind == "group-delooping":
            arg = p[0]
            c = corpus.group_delooping(json.loads(arg) if arg.startswith("[") else arg)
        elif args.kind == "random-category":
            c = corpus.random_category(int(p[0]), int(p[1]) if len(p) > 1 else 2, args.seed)
        elif args.kind == "codiscrete":
            c = corpus.codiscrete(int(p[0]) if p else 2)
        elif args.kind in ("walking-iso", "terminal"):
            if p:
                raise ValueError(f"{args.kind} takes no parameters")
            c = corpus.walking_iso() if args.kind == "walking-iso" else corpus.terminal()
        else:
            raise ValueError(f"unknown kind {args.kind}")
    except (IndexError, ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"bad parameters for {args.kind}: {exc}") from exc
    _emit(args, cat_to_dict(c))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="segalkit",
                                 description="Decide Segal, completeness and univalence conditions "
                                             "on finite semisimplicial sets and translate to and "
                                             "from composition tables.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_, file=True, level=True, check=True):
        sp = sub.add_parser(name, help=help_)
        if file:
            sp.add_argument("file", help=".sst.json (or .cat.json, nerve taken at --level)")
        if level:
            sp.add_argument("--level", type=int, default=None, help="nerve level for category input")
        if check:
            sp.add_argument("--json", action="store_true", help="print the report as JSON")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check the face identities")
    sp = add("segal-check", cmd_segal_check, "check the Segal condition")
    sp.add_argument("--exhaustive", action="store_true", help="count every violation")
    sp = add("horn-count", cmd_horn_count, "histogram of filler counts for one horn type")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    sp = add("nerve", cmd_nerve, "nerve of a category", level=False, check=False)
    sp.add_argument("--level", type=int, default=3, choices=range(1, 5))
    sp.add_argument("-o", "--output")
    sp = add("extract", cmd_extract, "composition table of a Segal set", level=False, check=False)
    sp.add_argument("--degeneracies", help=".deg.json providing identities")
    sp.add_argument("-o", "--output")
    sp = add("roundtrip", cmd_roundtrip, "nerve then extract, compare", level=False)
    sp.add_argument("--level", type=int, default=3, choices=range(2, 5))
    sp = add("complete-check", cmd_complete_check, "one neutral edge into each vertex")
    sp.add_argument("--reading", choices=("figure", "text"), default="figure",
                    help="position of the edge in left-neutrality horns")
    sp = add("univalence-check", cmd_univalence_check, "isomorphisms are exactly identities")
    sp.add_argument("--degeneracies", help=".deg.json; searched for when omitted")
    sp = add("synthesize-degeneracies", cmd_synthesize, "degeneracies from neutral edges", check=False)
    sp.add_argument("--target", type=int, default=2, choices=(1, 2, 3))
    sp.add_argument("-o", "--output")
    sp = sub.add_parser("generate", help="write a corpus category")
    sp.add_argument("kind", choices=sorted(corpus.GENERATORS))
    sp.add_argument("params", nargs="*")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_generate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SegalkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        witness = getattr(exc, "witness", None)
        if witness is not None:
            print(f"witness: {json.dumps(CheckReport(False, '', witness).to_dict()['witness'])}",
                  file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
