"""Command-line interface.

Machine-readable output (JSON or JSONL) goes to stdout; human-readable
tables go to stderr, or to a file via --report. Exit codes: 0 success,
2 usage or input/IO errors, 3 domain precondition failures, 4 lexicon
file format or version problems.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from fanlex import __version__
from fanlex.config import ENV_CONFIG, RunConfig, load_config_file, make_config
from fanlex.corpus import (
    Dataset,
    Label,
    corpus_stats,
    load_corpus,
    load_word_list,
    verify_stats,
)
from fanlex.errors import DomainError, FormatError, InputError, NoSentencesError
from fanlex.evaluation import cross_validate, evaluate_models
from fanlex.lexicon import (
    CountMode,
    ModelClass,
    RAW_POS_SEPARATOR,
    build_lexicon,
    lexicon_stats,
    load_lexicon,
    save_lexicon,
)
from fanlex.morph import (
    AnalyzerRuleTable,
    DEFAULT_SUFFIX_RULES,
    Locale,
    load_rule_table,
    load_suffix_rules,
    normalize,
)
from fanlex.scorer import TermSetMode, explain, score_batch

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_FORMAT = 4

_ALL_CLASSES = [c.value for c in ModelClass]


def _model_class(value: str) -> ModelClass:
    try:
        return ModelClass(value.upper())
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown model class {value!r}; pick from {', '.join(_ALL_CLASSES)}"
        ) from None


def _parse_classes(values: list[str] | None) -> list[ModelClass]:
    if not values:
        return list(ModelClass)
    out: list[ModelClass] = []
    for chunk in values:
        for name in chunk.split(","):
            name = name.strip()
            if name:
                out.append(_model_class(name))
    if len(set(out)) != len(out):
        raise InputError("duplicate entries in --classes")
    return out


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="FILE", help=f"config file (default ${ENV_CONFIG})")
    parser.add_argument("--locale", choices=["TURKISH", "GENERIC"])
    parser.add_argument("--count-mode", choices=["TOKEN_FREQ", "DOC_PRESENCE"])
    parser.add_argument("--term-set-mode", choices=["DISTINCT", "MULTISET"])
    parser.add_argument("--smoothing", type=float)
    parser.add_argument("--seed", type=int)
    title = parser.add_mutually_exclusive_group()
    title.add_argument("--include-title", dest="include_title", action="store_true", default=None)
    title.add_argument("--no-title", dest="include_title", action="store_false")
    parser.add_argument("--display-scale", type=float)
    parser.add_argument("--rule-table", metavar="FILE", help="JSONL analyzer rule table")
    parser.add_argument("--suffix-rules", metavar="FILE", help="TSV fallback suffix rules")
    parser.add_argument("--report", metavar="FILE", help="write the human-readable report here instead of stderr")


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    path = args.config or os.environ.get(ENV_CONFIG)
    file_values = load_config_file(path) if path else None
    overrides = {
        "smoothing": args.smoothing,
        "seed": args.seed,
        "include_title": args.include_title,
        "display_scale": args.display_scale,
    }
    if args.locale:
        overrides["locale"] = Locale[args.locale]
    if args.count_mode:
        overrides["count_mode"] = CountMode[args.count_mode]
    if args.term_set_mode:
        overrides["term_set_mode"] = TermSetMode[args.term_set_mode]
    return make_config(file_values, **overrides)


def _resolve_analyzer(args: argparse.Namespace, cfg: RunConfig) -> AnalyzerRuleTable | None:
    suffix_rules = (
        load_suffix_rules(args.suffix_rules) if args.suffix_rules else DEFAULT_SUFFIX_RULES
    )
    if args.rule_table:
        return load_rule_table(args.rule_table, cfg.locale, suffix_rules)
    if args.suffix_rules:
        return AnalyzerRuleTable(suffix_rules=suffix_rules)
    return None


def _emit_json(obj: object) -> None:
    sys.stdout.write(json.dumps(obj, ensure_ascii=False, separators=(",", ":")))
    sys.stdout.write("\n")


def _emit_report(args: argparse.Namespace, text: str) -> None:
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        sys.stderr.write(text if text.endswith("\n") else text + "\n")


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


def _check_label_purity(ds: Dataset, expected: Label, flag: str) -> None:
    for doc in ds.documents:
        if doc.label is not expected:
            raise InputError(
                f"{flag} corpus contains a document labeled {doc.label.value}: {doc.id!r}"
            )


def _group_key(doc) -> tuple[str, str]:
    return (doc.source or "(none)", doc.label.value)


def cmd_build_lexicon(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    analyzer = _resolve_analyzer(args, cfg)
    fake = load_corpus(args.fake)
    valid = load_corpus(args.valid)
    _check_label_purity(fake, Label.FAKE, "--fake")
    _check_label_purity(valid, Label.VALID, "--valid")
    lex = build_lexicon(
        fake,
        valid,
        args.model_class,
        cfg.count_mode,
        analyzer=analyzer,
        locale=cfg.locale,
        include_title=cfg.include_title,
        smoothing=cfg.smoothing,
    )
    save_lexicon(lex, args.out)
    stats = lexicon_stats(lex)
    _emit_json(
        {
            "class": lex.model_class.value,
            "count_mode": lex.count_mode.value,
            "unique_terms": stats.unique_terms,
            "common_terms": stats.common_terms,
            "only_fake": stats.only_fake,
            "only_valid": stats.only_valid,
            "fake_total": lex.fake_total,
            "valid_total": lex.valid_total,
            "out": args.out,
        }
    )
    _emit_report(
        args,
        _table(
            ["model", "unique terms", "common", "only fake", "only valid"],
            [
                [
                    lex.model_class.value,
                    str(stats.unique_terms),
                    str(stats.common_terms),
                    str(stats.only_fake),
                    str(stats.only_valid),
                ]
            ],
        ),
    )
    return EXIT_OK


def cmd_score(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    analyzer = _resolve_analyzer(args, cfg)
    if args.explain is not None and args.explain < 0:
        raise InputError("--explain must be >= 0")
    lexicons = [load_lexicon(path) for path in args.lexicon]
    ds = load_corpus(args.input)
    table = score_batch(
        ds,
        lexicons,
        cfg.term_set_mode,
        analyzer=analyzer,
        locale=cfg.locale,
        include_title=cfg.include_title,
    )
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for doc in ds.documents:
            for lex in lexicons:
                score = table[doc.id][lex.model_class]
                out.write(
                    json.dumps(
                        {
                            "id": doc.id,
                            "class": score.model_class.value,
                            "fake_score": score.fake_score,
                            "valid_score": score.valid_score,
                            "label": score.label.value,
                            "unknown_terms": score.unknown_terms,
                        },
                        ensure_ascii=False,
                        separators=(",", ":"),
                    )
                )
                out.write("\n")
    finally:
        if args.out:
            out.close()
    if args.explain:
        scale = cfg.display_scale
        blocks = []
        for doc in ds.documents:
            for lex in lexicons:
                rows = [
                    [
                        c.term.replace(RAW_POS_SEPARATOR, "/"),
                        f"{c.fake_score * scale:.4f}",
                        f"{c.valid_score * scale:.4f}",
                        f"{c.delta * scale:+.4f}",
                    ]
                    for c in explain(
                        doc,
                        lex,
                        args.explain,
                        analyzer=analyzer,
                        locale=cfg.locale,
                        include_title=cfg.include_title,
                    )
                ]
                blocks.append(
                    f"doc {doc.id} [{lex.model_class.value}] top terms (x{scale:g}):\n"
                    + _table(["term", "fake", "valid", "delta"], rows)
                )
        _emit_report(args, "\n\n".join(blocks))
    return EXIT_OK


def _metrics_obj(m) -> dict:
    return {
        "precision": m.precision,
        "recall": m.recall,
        "accuracy": m.accuracy,
        "f1": m.f1,
    }


def cmd_evaluate(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    analyzer = _resolve_analyzer(args, cfg)
    classes = _parse_classes(args.classes)
    train_fake = load_corpus(args.train_fake)
    train_valid = load_corpus(args.train_valid)
    _check_label_purity(train_fake, Label.FAKE, "--train-fake")
    _check_label_purity(train_valid, Label.VALID, "--train-valid")
    test = load_corpus(args.test)
    if not test.documents:
        raise DomainError("test corpus is empty")
    results = evaluate_models(train_fake, train_valid, test, classes, cfg, analyzer)
    _emit_json(
        {
            "config": cfg.to_dict(),
            "classes": [c.value for c in classes],
            "results": {
                c.value: {
                    "confusion": {
                        "tp": r.confusion.tp,
                        "fn": r.confusion.fn,
                        "fp": r.confusion.fp,
                        "tn": r.confusion.tn,
                    },
                    "metrics": _metrics_obj(r.metrics),
                }
                for c, r in results.items()
            },
        }
    )
    blocks = []
    for model_class, result in results.items():
        cm = result.confusion
        m = result.metrics
        blocks.append(
            f"== {model_class.value} ==\n"
            + _table(
                ["", "actual FAKE", "actual VALID"],
                [
                    ["predicted FAKE", str(cm.tp), str(cm.fp)],
                    ["predicted VALID", str(cm.fn), str(cm.tn)],
                ],
            )
            + f"\nprecision {m.precision:.3f}  recall {m.recall:.3f}"
            + f"  accuracy {m.accuracy:.3f}  f1 {m.f1:.3f}"
        )
    _emit_report(args, "\n\n".join(blocks))
    return EXIT_OK


def cmd_cross_validate(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    analyzer = _resolve_analyzer(args, cfg)
    classes = _parse_classes(args.classes)
    ds = load_corpus(args.input)
    report = cross_validate(ds, args.folds, classes, cfg.seed, cfg, analyzer)
    _emit_json(
        {
            "config": cfg.to_dict(),
            "folds": args.folds,
            "classes": [c.value for c in classes],
            "per_fold": [
                {
                    "fold": fm.fold,
                    "class": fm.model_class.value,
                    **_metrics_obj(fm.metrics),
                }
                for fm in report.per_fold
            ],
            "means": {c.value: _metrics_obj(m) for c, m in report.means.items()},
        }
    )
    rows = [
        [
            str(fm.fold),
            fm.model_class.value,
            f"{fm.metrics.precision:.3f}",
            f"{fm.metrics.recall:.3f}",
            f"{fm.metrics.accuracy:.3f}",
            f"{fm.metrics.f1:.3f}",
        ]
        for fm in report.per_fold
    ]
    for model_class, m in report.means.items():
        rows.append(
            [
                "mean",
                model_class.value,
                f"{m.precision:.3f}",
                f"{m.recall:.3f}",
                f"{m.accuracy:.3f}",
                f"{m.f1:.3f}",
            ]
        )
    _emit_report(
        args, _table(["fold", "class", "precision", "recall", "accuracy", "f1"], rows)
    )
    return EXIT_OK


def cmd_corpus_stats(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    ds = load_corpus(args.input)
    stats = corpus_stats(ds, include_title=cfg.include_title)
    groups: dict[tuple[str, str], int] = {}
    for doc in ds.documents:
        key = _group_key(doc)
        groups[key] = groups.get(key, 0) + 1
    ordered = sorted(groups.items())
    _emit_json(
        {
            "doc_count_by_label": {
                label.value: stats.doc_count_by_label[label]
                for label in (Label.FAKE, Label.VALID)
            },
            "mean_tokens_per_doc": stats.mean_tokens_per_doc,
            "mean_sentences_per_doc": stats.mean_sentences_per_doc,
            "token_total": stats.token_total,
            "groups": [
                {"source": source, "label": label, "count": count}
                for (source, label), count in ordered
            ],
        }
    )
    rows = [
        [source, label, str(count)] for (source, label), count in ordered
    ]
    summary = (
        f"documents: FAKE {stats.doc_count_by_label[Label.FAKE]}, "
        f"VALID {stats.doc_count_by_label[Label.VALID]}\n"
        f"tokens total {stats.token_total}, "
        f"mean tokens/doc {stats.mean_tokens_per_doc:.3f}, "
        f"mean sentences/doc {stats.mean_sentences_per_doc:.3f}"
    )
    _emit_report(args, _table(["source", "label", "documents"], rows) + "\n" + summary)
    return EXIT_OK


def cmd_verify_corpus(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    ds = load_corpus(args.input)
    slang = load_word_list(args.slang, cfg.locale)
    dictionary = load_word_list(args.dictionary, cfg.locale)
    overall = verify_stats(
        ds, slang, dictionary, locale=cfg.locale, include_title=cfg.include_title
    )
    group_docs: dict[tuple[str, str], list] = {}
    for doc in ds.documents:
        group_docs.setdefault(_group_key(doc), []).append(doc)
    group_rows = []
    for key in sorted(group_docs):
        subset = Dataset(tuple(group_docs[key]), ds.split)
        try:
            report = verify_stats(
                subset, slang, dictionary, locale=cfg.locale, include_title=cfg.include_title
            )
        except NoSentencesError:
            continue
        group_rows.append((key, report))
    _emit_json(
        {
            "overall": {
                "slang_per_sentence": overall.slang_per_sentence,
                "misspelling_per_sentence": overall.misspelling_per_sentence,
            },
            "groups": [
                {
                    "source": source,
                    "label": label,
                    "slang_per_sentence": rep.slang_per_sentence,
                    "misspelling_per_sentence": rep.misspelling_per_sentence,
                }
                for (source, label), rep in group_rows
            ],
        }
    )
    rows = [
        [f"{source} ({label})", f"{rep.slang_per_sentence:.3f}", f"{rep.misspelling_per_sentence:.3f}"]
        for (source, label), rep in group_rows
    ]
    rows.append(
        ["overall", f"{overall.slang_per_sentence:.3f}", f"{overall.misspelling_per_sentence:.3f}"]
    )
    _emit_report(
        args, _table(["group", "slang/sentence", "misspellings/sentence"], rows)
    )
    return EXIT_OK


def cmd_inspect_term(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    lexicons = [load_lexicon(path) for path in args.lexicon]
    results = []
    for lex in lexicons:
        entry = lex.entries.get(args.term)
        if entry is None and args.pos is not None:
            key = normalize(args.term, cfg.locale) + RAW_POS_SEPARATOR + args.pos
            entry = lex.entries.get(key)
        if entry is None:
            entry = lex.entries.get(normalize(args.term, cfg.locale))
        record: dict = {"class": lex.model_class.value, "found": entry is not None}
        if entry is not None:
            record.update(
                {
                    "term": entry.term,
                    "fake_count": entry.fake_count,
                    "valid_count": entry.valid_count,
                    "fake_score": entry.fake_score,
                    "valid_score": entry.valid_score,
                }
            )
        results.append(record)
    _emit_json({"term": args.term, "results": results})
    scale = cfg.display_scale
    rows = []
    for record in results:
        if record["found"]:
            rows.append(
                [
                    record["class"],
                    "yes",
                    f"{record['fake_score'] * scale:.4f}",
                    f"{record['valid_score'] * scale:.4f}",
                ]
            )
        else:
            rows.append([record["class"], "no", "-", "-"])
    _emit_report(
        args,
        f"term {args.term!r} (scores x{scale:g})\n"
        + _table(["class", "found", "fake", "valid"], rows),
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanlex",
        description="Build, score and evaluate fake/valid news term lexicons.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-lexicon", help="build a lexicon from two training corpora")
    p.add_argument("--fake", required=True, metavar="FILE")
    p.add_argument("--valid", required=True, metavar="FILE")
    p.add_argument("--class", dest="model_class", required=True, type=_model_class)
    p.add_argument("--out", required=True, metavar="FILE")
    _add_common(p)
    p.set_defaults(func=cmd_build_lexicon)

    p = sub.add_parser("score", help="score documents against lexicons")
    p.add_argument("--lexicon", action="append", required=True, metavar="FILE")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--out", metavar="FILE", help="write JSONL scores here instead of stdout")
    p.add_argument("--explain", type=int, metavar="N", help="report top N terms per document")
    _add_common(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("evaluate", help="train on two splits and evaluate on a test set")
    p.add_argument("--train-fake", required=True, metavar="FILE")
    p.add_argument("--train-valid", required=True, metavar="FILE")
    p.add_argument("--test", required=True, metavar="FILE")
    p.add_argument("--classes", action="append", metavar="LIST")
    _add_common(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("cross-validate", help="stratified k-fold cross-validation")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--folds", type=int, default=5)
    p.add_argument("--classes", action="append", metavar="LIST")
    _add_common(p)
    p.set_defaults(func=cmd_cross_validate)

    p = sub.add_parser("corpus-stats", help="document counts and token/sentence means")
    p.add_argument("--input", required=True, metavar="FILE")
    _add_common(p)
    p.set_defaults(func=cmd_corpus_stats)

    p = sub.add_parser("verify-corpus", help="slang and misspelling rates per sentence")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--slang", required=True, metavar="FILE")
    p.add_argument("--dictionary", required=True, metavar="FILE")
    _add_common(p)
    p.set_defaults(func=cmd_verify_corpus)

    p = sub.add_parser("inspect-term", help="look one term up across lexicons")
    p.add_argument("--term", required=True)
    p.add_argument("--pos", help="POS tag for surface+POS lexicon lookups")
    p.add_argument("--lexicon", action="append", required=True, metavar="FILE")
    _add_common(p)
    p.set_defaults(func=cmd_inspect_term)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except FormatError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FORMAT


def entry() -> None:
    raise SystemExit(main())
