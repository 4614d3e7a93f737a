"""``nc-degen`` command line.

Exit status: 0 when every check passes, 1 when some check fails, 2 on usage
or internal errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback

from .config import VerifyConfig
from .report import SUITE_NAMES, run_suite

EXPORTS = ("incidence", "complex", "surfaces", "m05", "lambda-pi1")


def _export(what: str) -> dict | list:
    from . import combinatorics as cx
    from .incidence import incidence_scheme
    from .surfaces import surfaces_table

    if what == "incidence":
        return incidence_scheme()
    if what == "complex":
        return cx.build_dual_complex().to_json()
    if what == "surfaces":
        return surfaces_table()
    if what == "m05":
        return cx.m05_presentation().to_json()
    if what == "lambda-pi1":
        return cx.pi1_presentation(cx.build_dual_complex()).to_json()
    raise KeyError(what)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nc-degen",
                                     description="Exact checks on a semistable degeneration of the Fano surface of a cubic threefold.")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all", choices=SUITE_NAMES)
    v.add_argument("--json", metavar="PATH", help="write the report as JSON ('-' for stdout)")
    v.add_argument("--dump-matrices", metavar="DIR", help="write d1 blocks and restriction matrices as CSV")
    v.add_argument("-q", "--quiet", action="store_true", help="only print the verdict line")
    e = sub.add_parser("export", help="write a data model as JSON")
    e.add_argument("what", choices=EXPORTS)
    e.add_argument("-o", "--output", metavar="PATH", default="-")
    return parser


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "export":
            _write(args.output, json.dumps(_export(args.what), indent=2, sort_keys=True) + "\n")
            return 0
        return verify(VerifyConfig.from_args(args))
    except Exception:
        traceback.print_exc()
        return 2


def verify(cfg: VerifyConfig) -> int:
    if cfg.dump_dir:
        from .spectral import dump_matrices
        dump_matrices(cfg.dump_dir)
    report = run_suite(cfg.suite)
    if cfg.json_path:
        _write(cfg.json_path, report.dumps())
    if cfg.json_path != "-":
        text = report.render()
        print(text.splitlines()[-1] if cfg.quiet else text)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
