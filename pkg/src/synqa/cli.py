"""Command-line entry point for the full pipeline.

One binary with subcommands: generation (read, candidate selection, sense
ranking, substitution, emission), the annotation workflow (blocks, review
file export/import, QC sampling, domain identification, verdict
application), dataset splits, scoring, and the review service for the
browser UI. Every sampling command requires an explicit --seed; no command
reads the clock or ambient randomness, so equal inputs give equal outputs.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from collections import Counter
from pathlib import Path

from . import annotation, dataset, evaluate, serve
from .generate import build_adversarial_set
from .textprep import TextPrepConfig, candidates as find_candidates, load_wordlist
from .wordnet import PartOfSpeech, load_wordnet
from .wsd import LeskConfig, Scope, WordVectors, build_window, lesk_rank

_SCOPES = {
    "question": Scope.QUESTION_ONLY,
    "paragraph": Scope.QUESTION_PLUS_PARAGRAPH,
}

_POS = {
    "noun": PartOfSpeech.NOUN,
    "verb": PartOfSpeech.VERB,
    "adjective": PartOfSpeech.ADJECTIVE,
    "adverb": PartOfSpeech.ADVERB,
}


@contextlib.contextmanager
def _stage(name: str):
    try:
        yield
    except BrokenPipeError:
        raise
    except Exception as err:  # surface the failing stage, exit non-zero
        print(f"error in {name}: {err}", file=sys.stderr)
        raise SystemExit(1)


def _load_store(args):
    with _stage("wordnet-load"):
        store = load_wordnet(args.wordnet_dir, domains_file=args.domains_file)
        if store.domains_report and store.domains_report.unmatched_keys:
            n = len(store.domains_report.unmatched_keys)
            print(f"domains: {n} rows reference unknown synsets", file=sys.stderr)
    return store


def _textprep_config(args) -> TextPrepConfig:
    config = TextPrepConfig(
        pos_whitelist=tuple(_POS[p] for p in args.pos.split(","))
    )
    if getattr(args, "stopword_file", None):
        config = TextPrepConfig(
            stopwords=frozenset(w.lower() for w in load_wordlist(args.stopword_file)),
            phrases=config.phrases,
            pos_whitelist=config.pos_whitelist,
        )
    if getattr(args, "phrase_file", None):
        config = TextPrepConfig(
            stopwords=config.stopwords,
            phrases=config.phrases
            + tuple(tuple(p.lower().split()) for p in load_wordlist(args.phrase_file)),
            pos_whitelist=config.pos_whitelist,
        )
    return config


def _lesk_config(args, stopwords) -> LeskConfig:
    vectors = None
    if getattr(args, "vectors", None):
        vectors = WordVectors.load(args.vectors)
    return LeskConfig(
        scope=_SCOPES[args.scope],
        include_examples=not getattr(args, "no_examples", False),
        stopwords=stopwords,
        vectors=vectors,
    )


def _load_base(path):
    with _stage("dataset-read"):
        data = dataset.read_squad(path)
        for issue in data.issues:
            print(f"dataset issue: {issue}", file=sys.stderr)
    return data


def _paragraphs_for(advs, base):
    items = base.by_id()
    return {
        adv.id: base.context_of(items[adv.origin_id])
        for adv in advs
        if adv.origin_id in items
    }


# -- subcommands ---------------------------------------------------------------


def cmd_generate(args) -> int:
    store = _load_store(args)
    base = _load_base(args.input)
    print(f"articles={len(base.articles)} questions={len(base.items)}")
    textprep = _textprep_config(args)
    lesk = _lesk_config(args, textprep.stopwords)
    strategies = ("single", "all") if args.strategy == "both" else (args.strategy,)
    with _stage("generate"):
        n_candidates = sum(
            len(find_candidates(item.question, store, textprep, paragraph=para))
            for item, para in base.pairs()
        )
        advs = build_adversarial_set(
            base.pairs(), store, lesk=lesk, textprep=textprep, strategies=strategies
        )
    by_strategy = Counter(a.strategy for a in advs)
    print(f"candidates={n_candidates}")
    for name in strategies:
        print(f"generated_{name}={by_strategy.get(name, 0)}")
    print(f"generated_total={len(advs)}")
    with _stage("emit"):
        items = dataset.adversarial_to_items(advs, base.by_id())
        dataset.write_squad(base.articles, items, args.output, version=base.version)
        dataset.write_provenance(advs, args.sidecar)
    print(f"wrote {args.output} and {args.sidecar}")
    return 0


def cmd_disambiguate(args, parser=None) -> int:
    store = _load_store(args)
    textprep = _textprep_config(args)
    found = find_candidates(
        args.question, store, textprep, paragraph=args.paragraph or None
    )
    target = next(
        (c for c in found if c.token.text.lower() == args.word.lower()
         or c.base_form == args.word.lower()),
        None,
    )
    if args.word.lower() not in args.question.lower():
        parser.error(f"word {args.word!r} does not occur in the question")
    if target is None:
        print(f"no senses for {args.word!r}")
        return 3
    lesk = _lesk_config(args, textprep.stopwords)
    window = build_window(
        args.question, args.paragraph or "", target, lesk.scope, store, lesk.stopwords
    )
    result = lesk_rank(target, window, store, lesk)
    for sense_score in result.all_scores:
        synset = sense_score.synset
        print(f"{sense_score.rank}\t{sense_score.score}\t{synset.id}\t{synset.gloss}")
    return 0


def cmd_blocks(args) -> int:
    base = _load_base(args.base)
    with _stage("blocks"):
        advs = dataset.read_provenance(args.sidecar)
        items = base.by_id()
        blocks = annotation.make_blocks(
            advs,
            seed=args.seed,
            article_of=lambda a: items[a.origin_id].paragraph_ref[0],
            min_size=args.block_size_min,
            max_size=args.block_size_max,
        )
        annotation.save_blocks(blocks, args.output, seed=args.seed)
    sizes = [len(b.question_ids) for b in blocks]
    print(f"blocks={len(blocks)} sizes={sizes}")
    print(f"wrote {args.output}")
    return 0


def cmd_export(args) -> int:
    store = _load_store(args)
    base = _load_base(args.base)
    with _stage("export"):
        advs = dataset.read_provenance(args.sidecar)
        by_id = {a.id: a for a in advs}
        block = next(
            (b for b in annotation.load_blocks(args.blocks) if b.block_id == args.block_id),
            None,
        )
        if block is None:
            raise ValueError(f"no block {args.block_id!r} in {args.blocks}")
        paragraphs = _paragraphs_for(advs, base)
        rows = annotation.export_review(
            block, by_id, args.output, store=store,
            paragraph_of=lambda a: paragraphs.get(a.id, ""),
        )
    print(f"rows={rows}")
    print(f"wrote {args.output}")
    return 0


def cmd_import(args) -> int:
    with _stage("import"):
        known = None
        if args.sidecar:
            known = {a.id for a in dataset.read_provenance(args.sidecar)}
        records = annotation.import_verdicts(
            args.file, known_ids=known, worker=args.worker, strict=not args.lenient
        )
        with open(args.output, "w", encoding="utf-8") as fh:
            for record in records:
                fh.write(serve.record_to_json(record) + "\n")
    reviewed = sum(1 for r in records if r.verdict is not annotation.Verdict.UNREVIEWED)
    print(f"records={len(records)} reviewed={reviewed}")
    print(f"wrote {args.output}")
    return 0


def _read_records(paths) -> list[annotation.AnnotationRecord]:
    records = []
    for path in paths:
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            if line.strip():
                records.append(serve.record_from_dict(json.loads(line)))
    return records


def cmd_qc(args) -> int:
    with _stage("qc"):
        records = _read_records(args.records)
        sample = annotation.qc_sample(records, args.rate, args.seed)
        by_worker: dict[str, list] = {}
        for record in records:
            by_worker.setdefault(record.worker_id, []).append(record)
    print(f"sampled={len(sample)} of {len(records)}")
    for record in sample:
        print(f"audit\t{record.question_id}\t{record.worker_id}")
    for worker, worker_records in sorted(by_worker.items()):
        report = annotation.worker_pass(worker_records)
        status = "pass" if report.passed else "fail"
        print(
            f"worker\t{worker or '(blank)'}\t{report.completed}/{report.total}"
            f"\t{status}"
        )
    return 0


def cmd_domains(args) -> int:
    store = _load_store(args)
    if store.domains_report is None:
        print("error in domains: no --domains-file given", file=sys.stderr)
        return 1
    with _stage("domains"):
        if args.sidecar:
            questions = dataset.read_provenance(args.sidecar)
        else:
            questions = _load_base(args.input).items
        profile = annotation.identify_domains(
            questions, store, seed=args.seed, sample_n=args.sample_n
        )
    print(f"sampled={len(profile.sampled_ids)}")
    for label, count in profile.ranked:
        print(f"domain\t{label}\t{count}")
    print(f"top2={','.join(profile.top2)}")
    return 0


def cmd_apply(args) -> int:
    base = _load_base(args.base)
    with _stage("apply"):
        advs = dataset.read_provenance(args.sidecar)
        records = _read_records(args.records)
        result = annotation.apply_verdicts(advs, records)
        items = dataset.adversarial_to_items(result.final, base.by_id())
        dataset.write_squad(base.articles, items, args.output, version=base.version)
        dataset.write_provenance(result.final, args.output_sidecar)
    print(
        f"verified={len(result.final)} rejected={len(result.rejected)} "
        f"unreviewed={len(result.unreviewed_ids)} "
        f"worker_added={len(result.worker_added)}"
    )
    print(f"improper_sentence_rate={result.improper_sentence_rate:.4f}")
    print(f"wrote {args.output} and {args.output_sidecar}")
    return 0


def cmd_split(args) -> int:
    base = _load_base(args.input)
    with _stage("split"):
        fractions = {}
        for part in args.fractions.split(","):
            name, _, value = part.partition("=")
            fractions[name.strip()] = float(value)
        result = dataset.split(base.items, fractions, seed=args.seed)
        out_dir = Path(args.output_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        by_id = base.by_id()
        for name in fractions:
            part_items = [by_id[qid] for qid in result.ids_of(name)]
            path = out_dir / f"{name}.json"
            dataset.write_squad(base.articles, part_items, path, version=base.version)
            print(f"{name}={len(part_items)} -> {path}")
    return 0


def cmd_evaluate(args) -> int:
    gold = _load_base(args.gold)
    with _stage("evaluate"):
        predictions = evaluate.read_predictions(args.predictions)
        report = evaluate.score(gold.items, predictions, dataset=args.name)
        reports = [report]
        paired = None
        if args.base_gold:
            base_gold = _load_base(args.base_gold)
            base_predictions = evaluate.read_predictions(args.base_predictions)
            base_report = evaluate.score(
                base_gold.items, base_predictions, dataset=args.base_name
            )
            reports.insert(0, base_report)
            provenance = dataset.read_provenance(args.sidecar)
            paired = evaluate.paired_report(base_report, report, provenance)
    if report.missing_ids:
        print(f"missing predictions for {len(report.missing_ids)} ids", file=sys.stderr)
    sys.stdout.write(evaluate.render_table(reports))
    if paired is not None:
        print(f"fragility={paired.fragility_str}")
        print(f"lucky_hit_candidates={len(paired.lucky_hit_candidates)}")
    if args.output:
        payload = {"reports": [r.to_dict() for r in reports]}
        if paired is not None:
            payload["paired"] = paired.to_dict()
        Path(args.output).write_text(
            json.dumps(payload, indent=1, sort_keys=True) + "\n", encoding="utf-8"
        )
        print(f"wrote {args.output}")
    return 0


def build_service(args) -> serve.ReviewService:
    base = _load_base(args.base)
    advs = dataset.read_provenance(args.sidecar)
    store = None
    if args.wordnet_dir:
        store = _load_store(args)
    blocks = annotation.load_blocks(args.blocks)
    version = serve.dataset_version(
        Path(args.sidecar).read_bytes(), Path(args.blocks).read_bytes()
    )
    state = serve.ReviewState(
        candidates={a.id: a for a in advs},
        blocks=blocks,
        version=version,
        paragraphs=_paragraphs_for(advs, base),
        store=store,
    )
    log = serve.VerdictLog(args.log)
    return serve.ReviewService(state, log)


def cmd_serve(args) -> int:
    with _stage("serve-startup"):
        service = build_service(args)
        server = serve.make_server(service, bind=args.bind, ui_dir=args.ui_dir)
    host, port = server.server_address[:2]
    print(f"review service on http://{host}:{port}/ version={service.state.version}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
        service.log.close()
    return 0


# -- parser ----------------------------------------------------------------------


def _add_wordnet_flags(p, domains=True):
    p.add_argument("--wordnet-dir", required=True, help="WordNet 3.0 dict directory")
    if domains:
        p.add_argument("--domains-file", help="WordNet Domains mapping file")


def _add_wsd_flags(p):
    p.add_argument("--scope", choices=sorted(_SCOPES), default="paragraph")
    p.add_argument("--pos", default="noun",
                   help="comma-separated candidate parts of speech")
    p.add_argument("--stopword-file", help="override the bundled stopword list")
    p.add_argument("--phrase-file", help="extra fixed phrases, one per line")
    p.add_argument("--vectors", help="word-vector file for soft sense matching")
    p.add_argument("--no-examples", action="store_true",
                   help="exclude usage examples from sense signatures")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="synqa",
        description="Synonym-substitution adversarial question sets for QA models",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build the candidate adversarial dataset")
    _add_wordnet_flags(p)
    _add_wsd_flags(p)
    p.add_argument("--input", required=True, help="SQuAD 2.0 base dataset")
    p.add_argument("--output", required=True, help="generated dataset path")
    p.add_argument("--sidecar", required=True, help="provenance sidecar path")
    p.add_argument("--strategy", choices=["single", "all", "both"], default="both")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("disambiguate", help="rank the senses of one word in context")
    _add_wordnet_flags(p)
    _add_wsd_flags(p)
    p.add_argument("--word", required=True)
    p.add_argument("--question", required=True)
    p.add_argument("--paragraph", default="")
    p.set_defaults(func=cmd_disambiguate, needs_parser=True)

    p = sub.add_parser("blocks", help="partition candidates into review blocks")
    p.add_argument("--sidecar", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--block-size-min", type=int, default=2000)
    p.add_argument("--block-size-max", type=int, default=2200)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("export", help="write a block's review spreadsheet")
    _add_wordnet_flags(p)
    p.add_argument("--sidecar", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--blocks", required=True)
    p.add_argument("--block-id", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("import", help="read verdicts back from a review file")
    p.add_argument("--file", required=True)
    p.add_argument("--sidecar", help="candidate sidecar for id validation")
    p.add_argument("--worker", default="")
    p.add_argument("--lenient", action="store_true",
                   help="keep malformed rows as invalid records")
    p.add_argument("--output", required=True, help="records file (JSON lines)")
    p.set_defaults(func=cmd_import)

    p = sub.add_parser("qc", help="audit-sample records and gate workers")
    p.add_argument("--records", nargs="+", required=True)
    p.add_argument("--rate", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_qc)

    p = sub.add_parser("domains", help="identify a question set's top domains")
    _add_wordnet_flags(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", help="SQuAD 2.0 dataset")
    group.add_argument("--sidecar", help="generated-question sidecar")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--sample-n", type=int, default=100)
    p.set_defaults(func=cmd_domains)

    p = sub.add_parser("apply", help="apply verdicts to produce the final dataset")
    p.add_argument("--sidecar", required=True)
    p.add_argument("--records", nargs="+", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--output-sidecar", required=True)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("split", help="seeded dataset split")
    p.add_argument("--input", required=True)
    p.add_argument("--fractions", default="train=0.8,dev=0.1,test=0.1")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--output-dir", required=True)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("evaluate", help="exact-match scoring and paired report")
    p.add_argument("--gold", required=True)
    p.add_argument("--predictions", required=True)
    p.add_argument("--name", default="dataset")
    p.add_argument("--base-gold")
    p.add_argument("--base-predictions")
    p.add_argument("--base-name", default="base")
    p.add_argument("--sidecar", help="provenance sidecar for the paired report")
    p.add_argument("--output", help="machine-readable report path")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("serve", help="run the review service")
    p.add_argument("--sidecar", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--blocks", required=True)
    p.add_argument("--log", required=True, help="append-only verdict log")
    p.add_argument("--bind", default="127.0.0.1:8765")
    p.add_argument("--wordnet-dir", help="dict directory, for glosses")
    p.add_argument("--domains-file")
    p.add_argument("--ui-dir", help="serve a built browser UI from this directory")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.command == "evaluate":
        given = [args.base_gold, args.base_predictions, args.sidecar]
        if any(given) and not all(given):
            parser.error(
                "--base-gold, --base-predictions and --sidecar go together"
            )
    if getattr(args, "needs_parser", False):
        return args.func(args, parser)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
