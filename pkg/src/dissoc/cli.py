"""Command-line interface.

Exit status: 0 on success, 2 when a checked bound is violated (a finding),
1 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import bounds, engine, families, oracle, survey, treegen
from .tree import Tree, TreeError, max_degree, parse_tree, serialize_tree

EXIT_OK, EXIT_ERROR, EXIT_FINDING = 0, 1, 2


class UsageError(Exception):
    pass


def _read_tree(path: str) -> Tree:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_tree(text)


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_psi(args) -> int:
    print(engine.psi(_read_tree(args.file)))
    return EXIT_OK


def cmd_phi(args) -> int:
    print(engine.phi(_read_tree(args.file)))
    return EXIT_OK


def cmd_enum(args) -> int:
    t = _read_tree(args.file)
    if args.limit is not None and args.limit < 1:
        raise UsageError("--limit must be >= 1")
    res = engine.enumerate_mds(t, args.limit)
    for s in res.sets:
        print(" ".join(map(str, s)))
    if res.truncated:
        print(f"# truncated after {len(res.sets)} sets")
    return EXIT_OK


def cmd_profile(args) -> int:
    t = _read_tree(args.file)
    p = engine.root_profile(t, args.vertex)
    _emit_json({"vertex": p.vertex, "psi": p.psi, "phi_out": p.phi_out, "phi_in0": p.phi_in0,
                "phi_in1": p.phi_in1, "phi": p.phi})
    return EXIT_OK


def cmd_check(args) -> int:
    t = _read_tree(args.file)
    psi, phi = engine.psi_phi(t)
    rep = bounds.phi_bound_checks(t.n, psi, phi)
    subcubic = max_degree(t) <= 3
    _emit_json({**rep.as_dict(), "subcubic": subcubic, "tau3": t.n - psi})
    # only the lower bound holds for arbitrary trees
    violated = not rep.lower_ok or (subcubic and not rep.all_ok)
    return EXIT_FINDING if violated else EXIT_OK


def cmd_oracle(args) -> int:
    t = _read_tree(args.file)
    res = oracle.brute_force(t, args.hard_cap)
    _emit_json({"psi": res.psi, "phi": res.phi, "sets": res.sets})
    return EXIT_OK


def _print_tree(t: Tree, header: str | None = None) -> None:
    if header:
        sys.stdout.write(f"# {header}\n")
    sys.stdout.write(serialize_tree(t))


def cmd_gen_family(args) -> int:
    spec = families.FamilySpec(args.kind, args.param)
    t, pred = families.build_family(spec)
    _print_tree(t, f"{args.kind}({args.param}) predicted n={pred.n} psi={pred.psi} phi={pred.phi}" if args.verbose else None)
    return EXIT_OK


def cmd_gen_extremal(args) -> int:
    variants = families.build_extremal(args.n, args.psi)
    if args.variant is not None:
        if not 0 <= args.variant < len(variants):
            raise UsageError(f"--variant must be in 0..{len(variants) - 1}")
        variants = [variants[args.variant]]
    for i, (t, pred) in enumerate(variants):
        _print_tree(t, f"variant {i}: predicted n={pred.n} psi={pred.psi} phi={pred.phi}")
    return EXIT_OK


def cmd_gen_random(args) -> int:
    _print_tree(treegen.random_subcubic(args.n, args.seed))
    return EXIT_OK


def cmd_survey(args) -> int:
    summary = survey.run_survey(args.max_n, args.out, jobs=args.jobs)
    print(f"rows={summary.rows} failures={summary.failures} attainment_gaps={summary.attainment_gaps} "
          f"equality_failures={summary.equality_failures}")
    return EXIT_OK if summary.passed else EXIT_FINDING


def cmd_report(args) -> int:
    sys.stdout.write(survey.write_report(args.dir))
    return EXIT_OK if survey.report_passed(args.dir) else EXIT_FINDING


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dissoc", description="Maximum dissociation sets in trees.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("psi", cmd_psi, "dissociation number"),
        ("phi", cmd_phi, "number of maximum dissociation sets"),
        ("check", cmd_check, "bound report as JSON"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="edge-list file, or - for stdin")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("enum", help="list maximum dissociation sets")
    sp.add_argument("file")
    sp.add_argument("--limit", type=int)
    sp.set_defaults(func=cmd_enum)

    sp = sub.add_parser("profile", help="split of the maximum sets by one vertex")
    sp.add_argument("file")
    sp.add_argument("--vertex", type=int, required=True)
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("oracle", help="brute-force psi, phi and all maximum sets")
    sp.add_argument("file")
    sp.add_argument("--hard-cap", type=int, default=oracle.DEFAULT_HARD_CAP)
    sp.set_defaults(func=cmd_oracle)

    gen = sub.add_parser("gen", help="generate trees").add_subparsers(dest="what", required=True)
    sp = gen.add_parser("family")
    sp.add_argument("--kind", choices=families.KINDS, required=True)
    sp.add_argument("--param", type=int, required=True)
    sp.set_defaults(func=cmd_gen_family)
    sp = gen.add_parser("extremal")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--psi", type=int, required=True)
    sp.add_argument("--variant", type=int, help="emit only this construction variant")
    sp.set_defaults(func=cmd_gen_extremal)
    sp = gen.add_parser("random")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(func=cmd_gen_random)

    sp = sub.add_parser("survey", help="exhaustive verification over subcubic trees")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_survey)

    sp = sub.add_parser("report", help="summarize a survey directory")
    sp.add_argument("dir")
    sp.set_defaults(func=cmd_report)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, TreeError, survey.SurveyFileError, oracle.OracleSizeError, bounds.InfeasiblePairError,
            treegen.GeneratorCeilingError, OSError, ValueError) as exc:
        print(f"dissoc: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
