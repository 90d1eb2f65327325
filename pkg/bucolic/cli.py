"""
Command-line front end.

Exit codes: 0 for success or membership, 1 for a principled negative answer,
2 for errors. Every input path may be ``-`` for standard input.
"""
import argparse
import hashlib
import io
import logging
import os
import sys

import django
from django.conf import settings
from django.test.utils import override_settings

from . import __version__, defaults, recognition
from .complexes import local_conditions
from .cover import NO, unfold, verdict
from .decompose import decompose_bucolic, verify_decomposition
from .exception_handlers import ExceptionHandler
from .generators import generate
from .hulls import convex_hull, gated_hull, gated_hull_of_triangle
from .mooring import BFS, LEXBFS, moor, verify_combing
from .objects import Document, InvalidParameterError, PreconditionViolation
from .parsers import GraphDocument, parse_document
from .renderers import DotRenderer, EdgeListRenderer, JSONRenderer, TextRenderer
from .serializers import (
    ClassReportSerializer,
    CoverSerializer,
    DecompositionSerializer,
    DocumentSerializer,
    GraphDocumentSerializer,
    HullSerializer,
    LocalConditionsSerializer,
    MooringSerializer,
    PrismSerializer,
)
from .symmetry import GroupAction, automorphisms, fixed_prism

logger = logging.getLogger(__name__)

TEXT = "text"
JSON = "json"

CLASS_CHOICES = ("all",) + tuple(
    name for name in recognition.CLASS_NAMES if name != recognition.WEAKLY_MODULAR
)
HULL_KINDS = ("convex", "gated", "triangle-gated")


def logging_config(verbose=False):
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {"plain": {"format": "%(levelname)s %(name)s: %(message)s"}},
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "formatter": "plain",
                "stream": "ext://sys.stderr",
            }
        },
        "loggers": {
            "bucolic": {
                "handlers": ["console"],
                "level": "DEBUG" if verbose else "WARNING",
            }
        },
    }


def configure(verbose=False):
    """
    Configure Django for a command-line run unless the host already did.
    """

    if not settings.configured:
        settings.configure(
            INSTALLED_APPS=["rest_framework", "bucolic"],
            LOGGING=logging_config(verbose),
            USE_I18N=False,
        )
        django.setup()
    elif verbose:
        logging.getLogger("bucolic").setLevel(logging.DEBUG)


def budget_overrides(environ=None):
    """
    Settings replaced by a positive integer in ``BUCOLIC_BUDGET``.

    :raises InvalidParameterError: on a value that is not a positive integer
    """

    value = (environ if environ is not None else os.environ).get("BUCOLIC_BUDGET")
    if value is None:
        return {}
    try:
        budget = int(value)
        if budget <= 0:
            raise ValueError(value)
    except ValueError:
        raise InvalidParameterError(
            "BUCOLIC_BUDGET must be a positive integer, got {!r}".format(value)
        )
    return {name: budget for name in defaults.BUDGET_SETTINGS}


def _vertices(graph, text):
    return [graph.vertex_for(label.strip()) for label in text.split(",") if label.strip()]


def _base(graph, label):
    return graph.vertices[0] if label is None else graph.vertex_for(label)


class Result:
    """
    What a command produced: serialized data, the exit code and, for raw
    output such as DOT, the bytes to write instead of a document.
    """

    def __init__(self, data=None, exit_code=0, raw=None):
        self.data = data
        self.exit_code = exit_code
        self.raw = raw


def cmd_check(args, document, context):
    graph = document.graph
    report = recognition.classify(graph, exhaustive=args.exhaustive)
    data = ClassReportSerializer(report, context=context).data
    if document.has_cells:
        data["local_conditions"] = LocalConditionsSerializer(
            local_conditions(document.complex()), context=context
        ).data
    if args.klass == "all":
        return Result(data)
    return Result(data, 0 if report[args.klass] else 1)


def cmd_hull(args, document, context):
    graph = document.graph
    seed = _vertices(graph, args.set)
    if args.kind == "convex":
        result = convex_hull(graph, seed)
    elif args.kind == "gated":
        result = gated_hull(graph, seed)
    else:
        result = gated_hull_of_triangle(graph, seed)
    context = dict(context, kind=args.kind, seed=seed)
    return Result(HullSerializer(result, context=context).data)


def cmd_cover(args, document, context):
    graph = document.graph
    complex_ = document.complex()
    state, _cover_complex = unfold(
        complex_, _base(graph, args.base), radius=args.radius, vertex_budget=args.budget
    )
    outcome = verdict(state)
    logger.debug("cover growth %s: %s", state.growth(), outcome)
    exit_code = 1 if outcome == NO else 0
    if args.emit == "dot":
        cover_graph, _index = state.cover_graph()
        dot = DotRenderer().render(cover_graph, renderer_context={"name": "cover"})
        return Result(exit_code=exit_code, raw=dot)
    context = dict(context, verdict=outcome)
    return Result(CoverSerializer(state, context=context).data, exit_code)


def _require_bucolic(graph):
    flag, certificate = recognition.is_bucolic(graph)
    if not flag:
        raise PreconditionViolation(
            "graph is not bucolic", certificate=certificate, exit_code=1
        )


def cmd_decompose(args, document, context):
    graph = document.graph
    _require_bucolic(graph)
    tree = decompose_bucolic(graph)
    verification = verify_decomposition(tree, graph)
    context = dict(context, verification=verification)
    return Result(
        DecompositionSerializer(tree, context=context).data,
        0 if verification[0] else 2,
    )


def cmd_moor(args, document, context):
    graph = document.graph
    mooring = moor(graph, _base(graph, args.base), method=args.method)
    combing = verify_combing(graph, mooring)
    context = dict(context, combing=combing)
    return Result(MooringSerializer(mooring, context=context).data, 0 if combing[0] else 1)


def cmd_fixprism(args, document, context):
    graph = document.graph
    if document.group:
        group = GroupAction.from_sequences(graph, document.group)
    else:
        logger.info("no group in the document; using every automorphism")
        group = automorphisms(graph)
    _require_bucolic(graph)
    witness = fixed_prism(graph, group)
    data = PrismSerializer(witness, context=context).data
    data["group_order"] = len(group)
    return Result(data)


def cmd_gen(args, document, context):
    params = []
    for token in args.params:
        for part in token.split(","):
            if not part:
                continue
            try:
                params.append(int(part))
            except ValueError:
                raise InvalidParameterError("parameter {!r} is not an integer".format(part))
    generated = GraphDocument(generate(args.family, params))
    data = GraphDocumentSerializer(generated).data
    if args.format == TEXT:
        return Result(data, raw=EdgeListRenderer().render(data))
    return Result(data)


COMMANDS = {
    "check": cmd_check,
    "hull": cmd_hull,
    "cover": cmd_cover,
    "decompose": cmd_decompose,
    "moor": cmd_moor,
    "fixprism": cmd_fixprism,
    "gen": cmd_gen,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=(TEXT, JSON), default=argparse.SUPPRESS, help="output format"
    )
    common.add_argument(
        "--verbose", action="store_true", default=argparse.SUPPRESS, help="debug logging"
    )

    parser = argparse.ArgumentParser(
        prog="bucolic", description="Bucolic graphs and triangle-square complexes."
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--format", choices=(TEXT, JSON), default=TEXT)
    parser.add_argument("--verbose", action="store_true", default=False)
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    check = commands.add_parser("check", parents=[common], help="class membership")
    check.add_argument("input")
    check.add_argument("--class", dest="klass", choices=CLASS_CHOICES, default="all")
    check.add_argument("--exhaustive", action="store_true")

    hull = commands.add_parser("hull", parents=[common], help="convex and gated hulls")
    hull.add_argument("input")
    hull.add_argument("--set", required=True, help="comma separated vertex labels")
    hull.add_argument("--kind", choices=HULL_KINDS, default="gated")

    cover = commands.add_parser("cover", parents=[common], help="unfold the universal cover")
    cover.add_argument("input")
    cover.add_argument("--base")
    bounds = cover.add_mutually_exclusive_group()
    bounds.add_argument("--radius", type=int)
    bounds.add_argument("--budget", type=int)
    cover.add_argument("--emit", choices=("stats", "dot"), default="stats")

    decompose = commands.add_parser("decompose", parents=[common], help="decomposition tree")
    decompose.add_argument("input")

    moor_ = commands.add_parser("moor", parents=[common], help="mooring and combing check")
    moor_.add_argument("input")
    moor_.add_argument("--base")
    moor_.add_argument("--method", choices=(BFS, LEXBFS), default=LEXBFS)

    fixprism = commands.add_parser("fixprism", parents=[common], help="invariant prism")
    fixprism.add_argument("input")

    gen = commands.add_parser("gen", parents=[common], help="generate a corpus graph")
    gen.add_argument("family")
    gen.add_argument("params", nargs="*")

    return parser


def _read(path, stdin):
    if path == "-":
        return stdin.read()
    with open(path, "rb") as handle:
        return handle.read()


def _emit(stream, payload):
    stream.write(payload)
    stream.flush()


def run(args, stdin, stdout, stderr, argv):
    meta = {"version": __version__, "command": ["bucolic"] + list(argv)}
    context = {"meta": meta}
    document = None
    try:
        if args.command != "gen":
            raw = _read(args.input, stdin)
            meta["input_hash"] = hashlib.sha256(raw).hexdigest()
            document = parse_document(io.BytesIO(raw))
            context["graph"] = document.graph
        with override_settings(**budget_overrides()):
            result = COMMANDS[args.command](args, document, context)
    except Exception as exc:
        handled = ExceptionHandler.handle(exc, context)
        if handled is None:
            raise
        data, exit_code = handled
        if args.format == JSON:
            _emit(stdout, JSONRenderer().render(data))
        else:
            _emit(stderr, TextRenderer().render(data))
        return exit_code

    if result.raw is not None:
        _emit(stdout, result.raw)
        return result.exit_code
    data = DocumentSerializer(Document(data=result.data, meta=meta)).data
    if args.format == JSON:
        _emit(stdout, JSONRenderer().render(data))
    else:
        _emit(stdout, TextRenderer().render(data, renderer_context={"command": args.command}))
    return result.exit_code


def main(argv=None, stdin=None, stdout=None, stderr=None):
    """
    Entry point of the ``bucolic`` console script; returns the exit code.
    """

    argv = sys.argv[1:] if argv is None else list(argv)
    stdin = stdin if stdin is not None else sys.stdin.buffer
    stdout = stdout if stdout is not None else sys.stdout.buffer
    stderr = stderr if stderr is not None else sys.stderr.buffer

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    configure(args.verbose)
    return run(args, stdin, stdout, stderr, argv)


if __name__ == "__main__":
    sys.exit(main())
