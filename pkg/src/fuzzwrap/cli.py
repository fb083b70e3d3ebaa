"""Command line interface: label validation, training, extraction, eval.

Domain failures exit 1 after printing one machine-readable JSON line to
stderr; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .corpus import AnomalyProfile, generate_corpus, load_corpus, save_corpus
from .errors import FuzzwrapError
from .evaluator import evaluate, evaluate_pages
from .extractor import extract, result_to_dict
from .induction import WrapperConfig, load_model, save_model, train
from .page_model import load_labelled_pages, validate_labels
from .report import write_report
from .store import ProjectStore, store_root
from .tokens import tokenize

log = logging.getLogger("fuzzwrap")


def _select(pages: dict[str, str], labels: list, page_ids: list[str] | None):
    if not page_ids:
        return pages, labels
    wanted = set(page_ids)
    missing = wanted - set(pages)
    if missing:
        raise FuzzwrapError(f"label file has no pages {sorted(missing)}")
    return (
        {pid: html for pid, html in pages.items() if pid in wanted},
        [lab for lab in labels if lab.page_id in wanted],
    )


def cmd_label_validate(args) -> int:
    pages, labels = load_labelled_pages(args.labels)
    for lab in labels:
        validate_labels(pages[lab.page_id], lab)
    print(f"ok: {len(labels)} page(s) validated")
    return 0


def _config_from_args(args) -> WrapperConfig:
    if getattr(args, "tolerant", False):
        base = WrapperConfig.tolerant()
    else:
        base = WrapperConfig()
    return WrapperConfig(
        decay_width=args.decay_width if args.decay_width is not None else base.decay_width,
        threshold=args.threshold if args.threshold is not None else base.threshold,
        combiner=args.combiner if args.combiner is not None else base.combiner,
        partition=base.partition,
    )


def cmd_train(args) -> int:
    pages, labels = load_labelled_pages(args.labels)
    pages, labels = _select(pages, labels, args.pages)
    log.info("training on %d page(s)", len(labels))
    model = train(pages, labels, _config_from_args(args))
    save_model(model, args.out)
    print(f"model written to {args.out} (window_len={model.window_len}, "
          f"separators={len(model.separators)})")
    return 0


def cmd_extract(args) -> int:
    model = load_model(args.model)
    page = Path(args.page).read_text(encoding="utf-8")
    result = extract(page, model, page_id=Path(args.page).stem)
    payload = json.dumps(result_to_dict(result), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
        print(f"result written to {args.out} ({len(result.records)} tuple(s))")
    else:
        print(payload, end="")
    return 0


def cmd_eval(args) -> int:
    model = load_model(args.model)
    sets = []
    for corpus_dir in args.corpus:
        pages = load_corpus(corpus_dir)
        sets.append(evaluate(pages, model, name=Path(corpus_dir).name))
    comparisons = None
    if args.baseline_labels:
        from .baseline import DelimiterBaseline

        b_pages, b_labels = load_labelled_pages(args.baseline_labels)
        baseline = DelimiterBaseline.fit(b_pages, b_labels)
        comparisons = {
            "baseline": [
                evaluate_pages(
                    load_corpus(corpus_dir),
                    lambda p: baseline.extract(p.html, p.page_id),
                    name=Path(corpus_dir).name,
                )
                for corpus_dir in args.corpus
            ]
        }
    if args.out_dir:
        written = write_report(sets, args.out_dir, figures=not args.no_figures,
                               comparisons=comparisons)
        print(f"report written to {args.out_dir} ({', '.join(sorted(written))})")
    for r in sets:
        print(f"{r.name}: recall={r.recall:.3f} precision={r.precision:.3f} "
              f"(extracted {r.extracted}/{r.total}, pertinent {r.pertinent})")
    return 0


def _parse_profile(text: str | None) -> AnomalyProfile:
    if not text:
        return AnomalyProfile()
    rates = {}
    for part in text.split(","):
        key, _, value = part.partition("=")
        rates[key.strip()] = float(value)
    return AnomalyProfile(**rates)


def cmd_corpus_gen(args) -> int:
    profile = _parse_profile(args.profile)
    corpus = generate_corpus(
        profile, args.n_pages, args.seed,
        min_records=args.min_records, max_records=args.max_records,
    )
    save_corpus(corpus, args.out)
    print(f"corpus written to {args.out}: {len(corpus.pages)} pages, "
          f"{corpus.counts.records} records "
          f"(missing={corpus.counts.missing}, permutation={corpus.counts.permutation}, "
          f"multivalue={corpus.counts.multivalue}, typo={corpus.counts.typo})")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    store = ProjectStore(store_root(args.store))
    app = create_app(store)
    uvicorn.run(app, host=args.host, port=args.port, log_level=args.log_level.lower())
    return 0


def cmd_tokenize(args) -> int:
    page = Path(args.page).read_text(encoding="utf-8")
    for t in tokenize(page):
        print(f"{t.span[0]}\t{t.span[1]}\t{t.cls.name}\t{t.lexeme!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzwrap")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    sub = parser.add_subparsers(dest="command", required=True)

    label = sub.add_parser("label", help="label file utilities")
    label_sub = label.add_subparsers(dest="label_command", required=True)
    validate = label_sub.add_parser("validate", help="validate a label file")
    validate.add_argument("--labels", required=True)
    validate.set_defaults(func=cmd_label_validate)

    train_p = sub.add_parser("train", help="learn a wrapper model from labelled pages")
    train_p.add_argument("--labels", required=True, help="label file (html paths resolve beside it)")
    train_p.add_argument("--pages", nargs="*", default=None, help="subset of page ids")
    train_p.add_argument("--out", required=True)
    train_p.add_argument("--decay-width", type=int, default=None)
    train_p.add_argument("--threshold", type=float, default=None)
    train_p.add_argument("--combiner", choices=["fuzzy", "sum"], default=None)
    train_p.add_argument("--tolerant", action="store_true",
                         help="start from the tolerant profile (sum combiner, threshold 2.0)")
    train_p.set_defaults(func=cmd_train)

    extract_p = sub.add_parser("extract", help="extract tuples from one page")
    extract_p.add_argument("--model", required=True)
    extract_p.add_argument("--page", required=True)
    extract_p.add_argument("--out", default=None)
    extract_p.set_defaults(func=cmd_extract)

    eval_p = sub.add_parser("eval", help="evaluate a model against gold corpora")
    eval_p.add_argument("--model", required=True)
    eval_p.add_argument("--corpus", action="append", required=True)
    eval_p.add_argument("--out-dir", default=None)
    eval_p.add_argument("--no-figures", action="store_true")
    eval_p.add_argument("--baseline-labels", default=None,
                        help="train the rigid delimiter baseline on this label file for comparison")
    eval_p.set_defaults(func=cmd_eval)

    corpus_p = sub.add_parser("corpus", help="synthetic corpus utilities")
    corpus_sub = corpus_p.add_subparsers(dest="corpus_command", required=True)
    gen = corpus_sub.add_parser("gen", help="generate a gold-labelled corpus")
    gen.add_argument("--out", required=True)
    gen.add_argument("--profile", default=None,
                     help="anomaly rates, e.g. missing=0.2,permutation=0.2")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--n-pages", type=int, default=10)
    gen.add_argument("--min-records", type=int, default=5)
    gen.add_argument("--max-records", type=int, default=9)
    gen.set_defaults(func=cmd_corpus_gen)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--port", type=int, default=8040)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--store", default=None, help="store root (default $FUZZWRAP_STORE)")
    serve.set_defaults(func=cmd_serve)

    tok = sub.add_parser("tokenize", help="dump the token stream of a page")
    tok.add_argument("--page", required=True)
    tok.set_defaults(func=cmd_tokenize)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level))
    try:
        return args.func(args) or 0
    except FuzzwrapError as exc:
        payload = {"error": exc.name, "detail": str(exc)}
        offset = getattr(exc, "offset", None)
        if offset is not None:
            payload["offset"] = offset
        print(json.dumps(payload), file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(
            json.dumps({"error": type(exc).__name__, "detail": str(exc)}),
            file=sys.stderr,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
