"""Command-line interface.

Commands: extract, validate, query, stats, geo. Standard output carries
only data; all human-readable diagnostics go to standard error. ``-``
reads standard input wherever a file is accepted.

Exit codes: 0 success, 1 validation findings, 2 resource error,
3 query or rule syntax error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from . import corpus, model, rules as rules_mod
from .lexicons import LexiconError, load_lexicon_set
from .pipeline import dump_parses
from .resources import default_data_root
from .xmlcodec import parse_newsform, serialize_newsform

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_RESOURCE = 2
EXIT_SYNTAX = 3


class OutputMode(Enum):
    XML = "xml"
    DEBUG = "debug"
    TSV = "tsv"


@dataclass(frozen=True)
class RunConfig:
    lexicons_dir: Path
    rules_dir: Path
    kb_dir: Path
    output: OutputMode = OutputMode.XML
    review: bool = False


class ResourceError(Exception):
    pass


def _load_resources(cfg: RunConfig):
    for name, directory in (("lexicons", cfg.lexicons_dir),
                            ("rules", cfg.rules_dir), ("kb", cfg.kb_dir)):
        if not directory.is_dir():
            raise ResourceError(f"{name} directory does not exist: {directory}")
    try:
        lexicons = load_lexicon_set(cfg.lexicons_dir)
    except (OSError, LexiconError) as exc:
        raise ResourceError(f"cannot load lexicons: {exc}") from exc
    compiled_rules = rules_mod.load_rules(cfg.rules_dir)
    kb = rules_mod.load_kb(cfg.kb_dir)
    return lexicons, compiled_rules, kb


def _read_input(name: str) -> str:
    if name == "-":
        return sys.stdin.read()
    return Path(name).read_text(encoding="utf-8")


def _cmd_extract(args, cfg: RunConfig) -> int:
    try:
        lexicons, compiled, kb = _load_resources(cfg)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except rules_mod.RuleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    for name in args.inputs:
        try:
            text = _read_input(name)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_RESOURCE
        result = rules_mod.extract(text, lexicons, compiled, kb)
        if cfg.output is OutputMode.DEBUG:
            sys.stdout.write(dump_parses(result.parses))
        sys.stdout.write(serialize_newsform(result.document))
        if cfg.review:
            for diagnostic in result.diagnostics:
                print(diagnostic.line(), file=sys.stderr)
            for fragment in result.fragments:
                variant = model.ELEMENT_OF_EVENT[type(fragment.event)]
                bound = ";".join(f"{k}={v}" for k, v in fragment.bindings.items())
                print(f"fragment\t{fragment.rule_id}\t{variant}\t"
                      f"sentence={fragment.sentence_index}\t{bound}", file=sys.stderr)
    return EXIT_OK


def _cmd_validate(args, cfg: RunConfig) -> int:
    findings = 0
    for name in args.files:
        try:
            text = _read_input(name)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_RESOURCE
        try:
            doc = parse_newsform(text)
        except ValueError as exc:
            print(f"{name}\t-\tsyntax\t{exc}")
            findings += 1
            continue
        report = model.validate(doc)
        for finding in report.errors:
            print(f"{name}\t{finding.path}\t{finding.code}\t{finding.message}")
            findings += 1
    return EXIT_FINDINGS if findings else EXIT_OK


def _corpus_index(corpus_arg: str):
    directory = Path(corpus_arg)
    if not directory.is_dir():
        raise ResourceError(f"corpus directory does not exist: {directory}")
    index = corpus.build_index(corpus.corpus_paths(directory))
    for line in index.diagnostics:
        print(line, file=sys.stderr)
    return index


def _query_error(text: str, exc: corpus.QueryError) -> int:
    print(f"error: {exc}", file=sys.stderr)
    print(f"  {text}", file=sys.stderr)
    print(f"  {' ' * exc.position}^", file=sys.stderr)
    return EXIT_SYNTAX


def _cmd_query(args, cfg: RunConfig) -> int:
    try:
        index = _corpus_index(args.corpus)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    try:
        expr = corpus.parse_query(args.query)
        hits = corpus.evaluate_query(index, expr)
    except corpus.QueryError as exc:
        return _query_error(args.query, exc)
    for hit in hits:
        print(f"{hit.doc_id}\t{hit.path}\t{hit.sort_value}")
    return EXIT_OK


def _cmd_stats(args, cfg: RunConfig) -> int:
    try:
        index = _corpus_index(args.corpus)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    try:
        result = corpus.stats(index, args.variant, corpus.Bucket(args.bucket))
    except corpus.QueryError as exc:
        return _query_error(args.variant, exc)
    for start, count in result.buckets:
        print(f"{start.strftime('%Y%m%d')}\t{count}")
    print(f"UNDATED\t{result.undated}")
    return EXIT_OK


def _cmd_geo(args, cfg: RunConfig) -> int:
    try:
        index = _corpus_index(args.corpus)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    try:
        expr = corpus.parse_query(args.query)
        distribution = corpus.geo_distribution(index, expr)
    except corpus.QueryError as exc:
        return _query_error(args.query, exc)
    for code, (positive, negative, other) in distribution.per_country:
        print(f"{code}\t{positive}\t{negative}\t{other}")
    positive, negative, other = distribution.unlocated
    print(f"UNLOCATED\t{positive}\t{negative}\t{other}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newsform",
        description="Structured news events: extraction, validation, queries.",
    )
    parser.add_argument("--lexicons", metavar="DIR", help="lexicon directory")
    parser.add_argument("--rules", metavar="DIR", help="extraction rule directory")
    parser.add_argument("--kb", metavar="DIR", help="commonsense table directory")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="convert text stories into documents")
    p.add_argument("inputs", nargs="+", metavar="FILE",
                   help="text files; - reads standard input")
    p.add_argument("--debug", action="store_true",
                   help="print the token/group/mention dump before the XML")
    p.add_argument("--review", action="store_true",
                   help="print diagnostics and fragments to standard error")

    p = sub.add_parser("validate", help="validate document files")
    p.add_argument("files", nargs="+", metavar="FILE")

    p = sub.add_parser("query", help="query a corpus directory")
    p.add_argument("corpus")
    p.add_argument("query")

    p = sub.add_parser("stats", help="per-day or per-week event counts")
    p.add_argument("corpus")
    p.add_argument("variant")
    p.add_argument("bucket", choices=[b.value for b in corpus.Bucket])

    p = sub.add_parser("geo", help="geographic sentiment distribution")
    p.add_argument("corpus")
    p.add_argument("query")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    root = default_data_root()
    cfg = RunConfig(
        lexicons_dir=Path(args.lexicons) if args.lexicons else root / "lexicons",
        rules_dir=Path(args.rules) if args.rules else root / "rules",
        kb_dir=Path(args.kb) if args.kb else root / "kb",
        output=OutputMode.DEBUG if getattr(args, "debug", False) else OutputMode.XML,
        review=getattr(args, "review", False),
    )
    command = {
        "extract": _cmd_extract,
        "validate": _cmd_validate,
        "query": _cmd_query,
        "stats": _cmd_stats,
        "geo": _cmd_geo,
    }[args.command]
    return command(args, cfg)


if __name__ == "__main__":
    sys.exit(main())
