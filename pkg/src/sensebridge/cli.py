"""Command-line entry points: translate, serve, eval, context.

Exit codes: 0 success, 1 input error (missing file, malformed document,
unknown id), 2 internal error.  Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import context as context_mod
from . import data_path, dialogue, evaluation, pipeline
from .config import ServiceConfig, load_config, render_config
from .errors import SenseBridgeError
from .lexicon import load_lexicon_file
from .skos import OntologyRegistry
from .translation import MockStatisticalMt, load_phrase_table_file

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sensebridge")
    sub = parser.add_subparsers(dest="command", required=True)

    tr = sub.add_parser("translate", help="translate one message through the pipeline")
    tr.add_argument("--text", required=True, help="message text (source language)")
    tr.add_argument("--lexicon", default=str(data_path("lexicon_pt.tsv")))
    tr.add_argument("--ontology", default=None, help="ontology id to bind (none: backend only)")
    tr.add_argument("--ontology-dir", default=str(data_path("ontologies")))
    tr.add_argument("--phrase-table", default=str(data_path("phrase_table_pt_en.tsv")))
    tr.add_argument("--source-lang", default="pt")
    tr.add_argument("--target-lang", default="en")
    tr.add_argument(
        "--seed-binding",
        action="append",
        default=[],
        metavar="SRC=TGT",
        help="pre-load a temporary-log binding (repeatable)",
    )
    tr.add_argument("--trace", action="store_true", help="print the full trace as JSON")

    sv = sub.add_parser("serve", help="run the HTTP service")
    sv.add_argument("--config", default=None, help="key=value config file (default: packaged fixtures)")
    sv.add_argument("--write-config", default=None, metavar="PATH",
                    help="write a starter config file and exit")

    ev = sub.add_parser("eval", help="run the evaluation harness")
    ev.add_argument("--corpus", default=str(data_path("eval_corpus.tsv")))
    ev.add_argument("--lexicon", default=str(data_path("lexicon_pt.tsv")))
    ev.add_argument("--ontology-dir", default=str(data_path("ontologies")))
    ev.add_argument("--contexts", default=str(data_path("contexts.tsv")))
    ev.add_argument("--phrase-table", default=str(data_path("phrase_table_pt_en.tsv")))
    ev.add_argument("--json-out", default=None, help="also write the report as JSON to this path")

    cx = sub.add_parser("context", help="select the pre-context for a message log")
    cx.add_argument("--log", required=True, help="message-log document (sender<TAB>text lines)")
    cx.add_argument("--contexts", default=str(data_path("contexts.tsv")))

    return parser


def _cmd_translate(args: argparse.Namespace) -> int:
    lexicon = load_lexicon_file(args.lexicon)
    registry = OntologyRegistry(args.ontology_dir)
    backend = MockStatisticalMt(load_phrase_table_file(args.phrase_table))
    session = dialogue.create_session(
        args.source_lang, args.target_lang, ontology_id=args.ontology, registry=registry
    )
    for pair in args.seed_binding:
        source, sep, target = pair.partition("=")
        if not sep or not source or not target:
            raise SenseBridgeError(f"--seed-binding expects SRC=TGT, got {pair!r}")
        dialogue.seed_binding(session, source, target)
    result = pipeline.translate_message(session, args.text, backend, lexicon, registry)
    print(result.final_text)
    if args.trace:
        print(json.dumps(result.trace.to_dict(), ensure_ascii=False, indent=2))
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    if args.write_config:
        Path(args.write_config).write_text(render_config(ServiceConfig()), encoding="utf-8")
        print(f"wrote {args.write_config}")
        return EXIT_OK
    config = load_config(args.config) if args.config else ServiceConfig()
    from . import service

    service.run(config)
    return EXIT_OK


def _cmd_eval(args: argparse.Namespace) -> int:
    corpus = evaluation.load_corpus_file(args.corpus)
    report = evaluation.run_eval(
        corpus,
        evaluation.DEFAULT_VARIANTS,
        lexicon=load_lexicon_file(args.lexicon),
        registry=OntologyRegistry(args.ontology_dir),
        contexts=context_mod.load_contexts_file(args.contexts),
        backend=MockStatisticalMt(load_phrase_table_file(args.phrase_table)),
    )
    print(report.render_table())
    if args.json_out:
        Path(args.json_out).write_text(evaluation.report_to_json(report), encoding="utf-8")
    return EXIT_OK


def _cmd_context(args: argparse.Namespace) -> int:
    log = context_mod.load_message_log_file(args.log)
    contexts = context_mod.load_contexts_file(args.contexts)
    selected = context_mod.select_session_context(log, contexts)
    print(selected.name if selected else "none")
    return EXIT_OK


_COMMANDS = {
    "translate": _cmd_translate,
    "serve": _cmd_serve,
    "eval": _cmd_eval,
    "context": _cmd_context,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (SenseBridgeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
