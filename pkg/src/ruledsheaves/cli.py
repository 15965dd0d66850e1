"""Command line interface.

Exit codes: 0 all checks pass, 2 the polarization hypothesis fails,
3 an audit fails, 4 bad input. The default output format can be set with
the ``RULEDSHEAVES_FORMAT`` environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys

from .config import parse_config
from .errors import RuledSheavesError
from .report import (
    EXIT_AUDIT,
    EXIT_INPUT,
    EXIT_OK,
    FORMATS,
    adjunction_checks,
    render_report,
    run_pipeline,
    strata_records,
    strata_text,
    to_json_lines,
)
from .strata import DEFAULT_MIN_PART, verify_lemma_p1

FORMAT_ENV = "RULEDSHEAVES_FORMAT"


def _default_format() -> str:
    fmt = os.environ.get(FORMAT_ENV, "text")
    return fmt if fmt in FORMATS else "text"


def _load(path: str):
    if path == "-":
        return parse_config(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def _cmd_surface(args) -> int:
    cfg = _load(args.config)
    res = run_pipeline(cfg, reduce=False)
    ok = all(want == got for _, want, got in adjunction_checks(cfg.surface))
    code = EXIT_OK if ok else EXIT_AUDIT
    sys.stdout.write(render_report(res, args.format, sections=("surface",), exit_code=code))
    return code


def _cmd_polarize(args) -> int:
    res = run_pipeline(_load(args.config), reduce=False)
    sys.stdout.write(render_report(res, args.format, sections=("polarization",)))
    return res.exit_code


def _cmd_reduce(args) -> int:
    res = run_pipeline(_load(args.config))
    code = EXIT_OK if res.trace.passed else EXIT_AUDIT
    sys.stdout.write(render_report(res, args.format, sections=("reduction",), exit_code=code))
    return code


def _cmd_report(args) -> int:
    res = run_pipeline(_load(args.config))
    sys.stdout.write(render_report(res, args.format))
    return res.exit_code


def _cmd_strata(args) -> int:
    rep = verify_lemma_p1(args.rank, args.d, args.min_part)
    if args.format == "json-lines":
        sys.stdout.write(to_json_lines(strata_records(rep)))
    else:
        sys.stdout.write(strata_text(rep))
    return EXIT_OK if rep.passed else EXIT_AUDIT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ruledsheaves",
        description="Chern-data bookkeeping for sheaves on birationally ruled surfaces.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default=_default_format())
    sub = parser.add_subparsers(dest="command", required=True)

    surface = sub.add_parser("surface", help="surface-level checks")
    surface_sub = surface.add_subparsers(dest="surface_command", required=True)
    check = surface_sub.add_parser("check", parents=[fmt], help="lattice and adjunction checks")
    check.add_argument("config")
    check.set_defaults(func=_cmd_surface)

    pol = sub.add_parser("polarize", parents=[fmt], help="construct or verify the polarization")
    pol.add_argument("config")
    pol.set_defaults(func=_cmd_polarize)

    red = sub.add_parser("reduce", parents=[fmt], help="reduction trace with dimension audits")
    red.add_argument("config")
    red.set_defaults(func=_cmd_reduce)

    strata = sub.add_parser("strata", parents=[fmt], help="splitting-type strata on P1")
    strata.add_argument("--rank", type=int, required=True)
    strata.add_argument("--d", type=int, required=True)
    strata.add_argument("--min-part", type=int, default=DEFAULT_MIN_PART)
    strata.set_defaults(func=_cmd_strata)

    rep = sub.add_parser("report", parents=[fmt], help="full pipeline report")
    rep.add_argument("config")
    rep.set_defaults(func=_cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (RuledSheavesError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
