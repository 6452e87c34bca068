"""Command-line interface for the Igbo text representation pipeline.

Commands: normalize, tokenize, represent, matrix, features. Exit codes:
0 success, 1 usage error, 2 decode error, 3 I/O error, 4 format or
invariant error in a data file.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import Mode
from .errors import (
    DecodeError,
    LexiconFormatError,
    LexiconInvariantError,
    PipelineStageError,
)
from .normalize import NormalizerConfig, normalize
from .pipeline import (
    Pipeline,
    PipelineConfig,
    build_doc_term_matrix,
    bundle_to_json,
    bundle_to_tsv,
    features_to_json,
    features_to_tsv,
    matrix_to_json,
    matrix_to_tsv,
    run_features,
    write_output,
)
from .textio import load_corpus
from .tokenize import TokenizerConfig, tokenize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DECODE = 2
EXIT_IO = 3
EXIT_DATA = 4


class _CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        self.code = code
        self.message = message
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; this tool reserves 2
    # for decode errors.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise _CliError(EXIT_USAGE, f"{self.prog}: error: {message}")


def _parse_orders(value: str) -> tuple[int, ...]:
    try:
        orders = tuple(int(piece) for piece in value.split(",") if piece.strip())
    except ValueError:
        raise _CliError(EXIT_USAGE, f"invalid --n value {value!r}") from None
    if not orders or any(n not in (1, 2, 3) for n in orders):
        raise _CliError(EXIT_USAGE, f"--n must name orders from 1,2,3, got {value!r}")
    return orders


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("paper", "strict"), default="paper",
                        help="pipeline behaviour (default: paper)")
    common.add_argument("--stopwords", metavar="PATH", default=None,
                        help="stop-word file (default: shipped list)")
    common.add_argument("--format", choices=("tsv", "json"), default="tsv",
                        help="output format (default: tsv)")
    common.add_argument("--output", metavar="PATH", default=None,
                        help="output file (default: stdout)")

    parser = _Parser(prog="igbotext", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("normalize", parents=[common], help="print normalized text")
    p.add_argument("file")

    p = sub.add_parser("tokenize", parents=[common], help="print the token stream")
    p.add_argument("file")

    p = sub.add_parser("represent", parents=[common], help="n-gram frequency tables")
    p.add_argument("file")
    p.add_argument("--n", default="1,2,3", help="comma-separated orders (default: 1,2,3)")

    p = sub.add_parser("matrix", parents=[common], help="document-term matrix over a directory")
    p.add_argument("dir")
    p.add_argument("--n", type=int, default=1, help="n-gram order (default: 1)")

    p = sub.add_parser("features", parents=[common], help="lexicon key features of a document")
    p.add_argument("file")
    p.add_argument("--lexicon", metavar="PATH", default=None,
                   help="lexicon file (default: shipped lexicon)")
    return parser


def _pipeline_config(args: argparse.Namespace, orders: tuple[int, ...] = (1, 2, 3)) -> PipelineConfig:
    return PipelineConfig(
        mode=Mode.parse(args.mode),
        stoplist_path=Path(args.stopwords) if args.stopwords else None,
        lexicon_path=Path(args.lexicon) if getattr(args, "lexicon", None) else None,
        orders=orders,
        output_format=args.format,
    )


def _cmd_normalize(args: argparse.Namespace) -> str:
    doc = load_corpus([args.file])[0]
    cfg = NormalizerConfig(mode=Mode.parse(args.mode))
    out = normalize(doc, cfg)
    if args.format == "json":
        return json.dumps({"doc_id": out.id, "text": out.text}, ensure_ascii=False, indent=2) + "\n"
    return out.text + "\n"


def _cmd_tokenize(args: argparse.Namespace) -> str:
    doc = load_corpus([args.file])[0]
    mode = Mode.parse(args.mode)
    stream = tokenize(normalize(doc, NormalizerConfig(mode=mode)), TokenizerConfig(mode=mode))
    if args.format == "json":
        payload = {"doc_id": stream.doc_id, "tokens": stream.surfaces()}
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    return "".join(surface + "\n" for surface in stream.surfaces())


def _cmd_represent(args: argparse.Namespace) -> str:
    orders = _parse_orders(args.n)
    cfg = _pipeline_config(args, orders)
    doc = load_corpus([args.file])[0]
    bundle = Pipeline(cfg).represent(doc)
    return bundle_to_json(bundle) if args.format == "json" else bundle_to_tsv(bundle)


def _cmd_matrix(args: argparse.Namespace) -> str:
    root = Path(args.dir)
    if not root.is_dir():
        raise _CliError(EXIT_IO, f"not a directory: {root}")
    paths = sorted(root.glob("*.txt"))
    cfg = _pipeline_config(args, (args.n,))
    pipeline = Pipeline(cfg)
    bundles = [pipeline.represent(doc) for doc in load_corpus(list(paths))]
    matrix = build_doc_term_matrix(bundles, args.n)
    return matrix_to_json(matrix) if args.format == "json" else matrix_to_tsv(matrix)


def _cmd_features(args: argparse.Namespace) -> str:
    cfg = _pipeline_config(args)
    doc = load_corpus([args.file])[0]
    bundle = run_features(doc, cfg)
    features = bundle.features or []
    if args.format == "json":
        return features_to_json(bundle.doc_id, features)
    return features_to_tsv(features)


_COMMANDS = {
    "normalize": _cmd_normalize,
    "tokenize": _cmd_tokenize,
    "represent": _cmd_represent,
    "matrix": _cmd_matrix,
    "features": _cmd_features,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        text = _COMMANDS[args.command](args)
        write_output(text, args.output)
        return EXIT_OK
    except _CliError as exc:
        print(exc.message, file=sys.stderr)
        return exc.code
    except PipelineStageError as exc:
        print(f"igbotext: {exc}", file=sys.stderr)
        return _exit_code_for(exc.cause)
    except (DecodeError, LexiconFormatError, LexiconInvariantError) as exc:
        print(f"igbotext: {exc}", file=sys.stderr)
        return _exit_code_for(exc)
    except OSError as exc:
        print(f"igbotext: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"igbotext: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _exit_code_for(exc: Exception) -> int:
    if isinstance(exc, DecodeError):
        return EXIT_DECODE
    if isinstance(exc, (LexiconFormatError, LexiconInvariantError)):
        return EXIT_DATA
    if isinstance(exc, OSError):
        return EXIT_IO
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
