"""``quiver-cover`` command line.

One subcommand per registered command node; arguments come from the node's
``INPUT_TYPES``. The workspace and other required inputs are positional,
ideal inputs are named flags (``--i0 I0``, ``--extra-root I1`` repeatable),
the remaining optional inputs are ``--flags`` and hidden ``SETTINGS`` inputs
receive the merged settings.
"""

import argparse
import logging
import os
import sys

from . import NODE_CLASS_MAPPINGS, NODE_DISPLAY_NAME_MAPPINGS
from .errors import ConsistencyError, QuiverCoverError, UsageError
from .settings import Settings
from .workspace import parse

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_globals(parser, default):
    parser.add_argument("--json", action="store_true", default=default(False), help="machine-readable report")
    parser.add_argument("--verbose", action="store_true", default=default(False), help="debug logging to stderr")
    parser.add_argument("--tau", default=default(None), help="τ scalars tried per bypass in Γ, e.g. '1,-1,2'")
    parser.add_argument("--rep-cap", type=int, default=default(None), help="ideal representatives kept per Γ node")
    parser.add_argument("--node-cap", type=int, default=default(None), help="maximal number of Γ nodes")


def _flag(name):
    return "--" + name.replace("_", "-")


def _add_input(parser, name, spec, required):
    kind = spec[0]
    config = spec[1] if len(spec) > 1 else {}
    if kind == "WORKSPACE":
        parser.add_argument(name, help="workspace file ('-' for stdin)")
    elif kind == "IDEAL" and config.get("multiple"):
        parser.add_argument(_flag(name), dest=name, action="append", default=None, metavar="NAME", help="ideal block name, repeatable")
    elif kind == "IDEAL":
        parser.add_argument(
            _flag(name), dest=name, required=required, default=config.get("default", ""), metavar="NAME", help="ideal block name"
        )
    elif required:
        parser.add_argument(name, metavar=name.upper(), help=kind.lower())
    elif kind == "BOOLEAN":
        parser.add_argument(_flag(name), dest=name, action="store_true", default=config.get("default", False))
    elif kind == "INT":
        parser.add_argument(_flag(name), dest=name, type=int, default=config.get("default", 0))
    else:
        parser.add_argument(_flag(name), dest=name, default=config.get("default", ""), help=kind.lower())


def build_parser():
    parser = _Parser(prog="quiver-cover", description="Presentations of bound quivers and their universal covers.")
    _add_globals(parser, lambda v: v)
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    for name, cls in NODE_CLASS_MAPPINGS.items():
        schema = cls.INPUT_TYPES()
        node_parser = sub.add_parser(
            name, help=NODE_DISPLAY_NAME_MAPPINGS.get(name, name), description=getattr(cls, "DESCRIPTION", None)
        )
        _add_globals(node_parser, lambda v: argparse.SUPPRESS)
        for input_name, spec in schema.get("required", {}).items():
            _add_input(node_parser, input_name, spec, True)
        for input_name, spec in schema.get("optional", {}).items():
            _add_input(node_parser, input_name, spec, False)
    return parser


def _read(path, stdin):
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from None


def _settings(args, environ):
    settings = Settings.from_env(environ)
    return settings.with_overrides(
        tau_scalars=args.tau,
        representative_cap=args.rep_cap,
        node_cap=args.node_cap,
    )


def _invoke(cls, args, settings, stdin):
    schema = cls.INPUT_TYPES()
    kwargs = {}
    for section in ("required", "optional"):
        for name, spec in schema.get(section, {}).items():
            value = getattr(args, name)
            kwargs[name] = parse(_read(value, stdin)) if spec[0] == "WORKSPACE" else value
    for name, kind in schema.get("hidden", {}).items():
        if kind == "SETTINGS":
            kwargs[name] = settings
    node = cls()
    (report,) = getattr(node, cls.FUNCTION)(**kwargs)
    return report


def run(argv=None, stdout=None, stderr=None, stdin=None, environ=None):
    """Run one subcommand; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    environ = os.environ if environ is None else environ

    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return EXIT_OK if not e.code else EXIT_USAGE

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        settings = _settings(args, environ)
        report = _invoke(NODE_CLASS_MAPPINGS[args.command], args, settings, stdin)
    except UsageError as e:
        stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except QuiverCoverError as e:
        stderr.write(f"error: {e}\n")
        if isinstance(e, ConsistencyError) or isinstance(getattr(e, "cause", None), ConsistencyError):
            trace = e.trace if isinstance(e, ConsistencyError) else e.cause.trace
            for line in trace:
                stderr.write(f"  {line}\n")
        return EXIT_DOMAIN

    stdout.write(report.render(as_json=args.json))
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
