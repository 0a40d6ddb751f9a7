"""Command-line interface for the verification suite."""

import argparse
import sys

from .checks import ConfigError, registry, resolve
from .verify import exit_code, report_text, run_check, run_suite


def _cmd_list(args):
    for ident, spec in sorted(registry().items()):
        qs = ",".join(str(q) for q in spec.qs)
        print(f"{ident:28s} q∈{{{qs}}}  {spec.summary}")
    return 0


def _cmd_check(args):
    entry = run_check(args.id, q=args.q, seed=args.seed)
    print(entry.line())
    return exit_code([entry])


def _cmd_suite(args):
    entries = run_suite(pattern=args.glob, jobs=args.jobs, seed=args.seed)
    text = report_text(entries)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return exit_code(entries)


def build_parser():
    p = argparse.ArgumentParser(prog="unirack", description="conjugacy-class rack verification suite")
    sub = p.add_subparsers(dest="cmd", required=True)

    sub.add_parser("list-checks", help="list all check ids").set_defaults(fn=_cmd_list)

    c = sub.add_parser("check", help="run a single check")
    c.add_argument("id")
    c.add_argument("--q", type=int, default=None)
    c.add_argument("--seed", type=int, default=None)
    c.set_defaults(fn=_cmd_check)

    s = sub.add_parser("suite", help="run all checks matching a glob")
    s.add_argument("glob", nargs="?", default="*")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--report", default=None)
    s.set_defaults(fn=_cmd_suite)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
