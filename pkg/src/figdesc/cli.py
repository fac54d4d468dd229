"""Command line front end.

Subcommands: detect, calibrate, classify, evaluate, baseline. Every flag can
also be supplied via a FIGDESC_* environment variable or a JSON config file
(--config); flags win over the environment, which wins over the file. Exit
codes: 0 success, 1 usage/config error, 2 data error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import baseline as bl
from . import pipeline, scoring
from .errors import AlignmentError, ConfigError, FigdescError

ENV_PREFIX = "FIGDESC_"

DEFAULT_LAMBDAS = "0.1,0.3,0.5,0.7,0.9,1.5"

_FLAG_NAMES = (
    "corpus",
    "ontology",
    "synsets",
    "embeddings",
    "gazetteer",
    "weights",
    "lambda",
    "window",
    "out",
    "seed",
    "jobs",
    "pattern",
    "scores",
    "gold",
    "labeled",
    "folds",
    "lambdas",
    "concept_metrics",
)


class Settings:
    """Layered lookup: CLI flag, then environment, then config file, then default."""

    def __init__(self, args: argparse.Namespace):
        self._args = vars(args)
        self._file = {}
        config_path = self._args.get("config") or os.environ.get(ENV_PREFIX + "CONFIG")
        if config_path:
            try:
                self._file = json.loads(Path(config_path).read_text())
            except OSError as e:
                raise ConfigError(f"cannot read config file {config_path}: {e}") from e
            except json.JSONDecodeError as e:
                raise ConfigError(f"config file {config_path}: {e.msg}") from e
            if not isinstance(self._file, dict):
                raise ConfigError("config file must hold a JSON object")

    def get(self, name: str, default=None, cast=None):
        # argparse stores --lambda under lambda_ (keyword clash)
        dest = "lambda_" if name == "lambda" else name.replace("-", "_")
        value = self._args.get(dest)
        if value is None:
            value = os.environ.get(ENV_PREFIX + name.replace("-", "_").upper())
        if value is None:
            value = self._file.get(name)
        if value is None:
            value = default
        if value is not None and cast is not None:
            try:
                return cast(value)
            except (TypeError, ValueError) as e:
                raise ConfigError(f"bad value for --{name}: {value!r}") from e
        return value

    def require(self, name: str, cast=None):
        value = self.get(name, cast=cast)
        if value is None:
            raise ConfigError(f"--{name} is required for this command")
        return value


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--corpus", help="directory of article files")
    p.add_argument("--ontology", help="ontology/lexicon file")
    p.add_argument("--synsets", help="synonym-set JSON file")
    p.add_argument("--embeddings", help="word embedding text file")
    p.add_argument("--gazetteer", help="chemical gazetteer file")
    p.add_argument("--weights", help="calibrated weight table JSON")
    p.add_argument("--lambda", dest="lambda_", type=float, help="threshold scale factor")
    p.add_argument("--window", type=int, help="neighbor window size")
    p.add_argument("--out", help="output directory")
    p.add_argument("--seed", type=int, help="random seed (baseline folds)")
    p.add_argument("--jobs", type=int, help="worker pool size for per-article work")
    p.add_argument("--pattern", help="override figure-reference regex")
    p.add_argument("--config", help="JSON config file with flag defaults")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figdesc",
        description="Find figure-descriptive sentences in scientific article text.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="list figure references and their candidates")
    _add_common(p)

    p = sub.add_parser("calibrate", help="build a weight table from a corpus")
    _add_common(p)

    p = sub.add_parser("classify", help="score and classify candidate sentences")
    _add_common(p)

    p = sub.add_parser("evaluate", help="lambda sweep and metrics against gold labels")
    _add_common(p)
    p.add_argument("--scores", help="scores JSONL from classify")
    p.add_argument("--gold", help="gold label JSONL")
    p.add_argument("--lambdas", help="comma-separated lambda values to sweep")

    p = sub.add_parser("baseline", help="bag-of-words logistic regression CV")
    _add_common(p)
    p.add_argument("--labeled", help="labeled sentence JSONL")
    p.add_argument("--folds", type=int, help="cross-validation fold count")
    p.add_argument(
        "--concept-metrics", help="metrics JSON from evaluate, for side-by-side"
    )

    return parser


def _out_dir(settings: Settings) -> Path:
    out = Path(settings.require("out"))
    out.mkdir(parents=True, exist_ok=True)
    return out


def _shared_settings(settings: Settings) -> dict:
    return {
        "lambda": settings.get("lambda", 0.5, float),
        "window": settings.get("window", 2, int),
        "pattern": settings.get("pattern"),
        "seed": settings.get("seed", 0, int),
    }


def _load_resources(settings: Settings) -> tuple[pipeline.Resources, dict]:
    paths = {
        "ontology": settings.require("ontology"),
        "synsets": settings.get("synsets"),
        "embeddings": settings.get("embeddings"),
        "gazetteer": settings.get("gazetteer"),
    }
    res = pipeline.load_resources(
        paths["ontology"], paths["synsets"], paths["embeddings"], paths["gazetteer"]
    )
    return res, paths


def _hash_corpus(corpus_dir: str) -> dict[str, str | Path]:
    root = Path(corpus_dir)
    return {
        f"corpus/{f.name}": f
        for f in sorted(root.iterdir())
        if f.suffix in (".json", ".xml", ".conllu")
    }


def cmd_detect(settings: Settings) -> int:
    corpus_dir = settings.require("corpus")
    out = _out_dir(settings)
    shared = _shared_settings(settings)
    articles = pipeline.load_corpus_dir(corpus_dir)
    jobs = settings.get("jobs", 1, int)
    detections = pipeline.map_articles(
        articles,
        lambda a: pipeline.detect_article(a, shared["window"], shared["pattern"]),
        jobs,
    )
    records = []
    total_refs = 0
    total_candidates = 0
    for det in sorted(detections, key=lambda d: d.uid):
        total_refs += len(det.refs)
        total_candidates += len(det.candidate_indices)
        for ref in det.refs:
            records.append({"uid": det.uid, **ref})
    header = pipeline.provenance(_hash_corpus(corpus_dir), shared)
    pipeline.write_jsonl(out / "detect.jsonl", header, records)
    print(
        f"detect: {len(articles)} articles, {total_refs} figure-referring sentences, "
        f"{total_candidates} candidate sentences -> {out / 'detect.jsonl'}"
    )
    return 0


def cmd_calibrate(settings: Settings) -> int:
    corpus_dir = settings.require("corpus")
    out = _out_dir(settings)
    shared = _shared_settings(settings)
    res, resource_paths = _load_resources(settings)
    articles = pipeline.load_corpus_dir(corpus_dir)
    jobs = settings.get("jobs", 1, int)
    config = scoring.ScoringConfig(lambda_=shared["lambda"], window=shared["window"])
    refs = pipeline.reference_tmrs(articles, res, shared["pattern"], jobs)
    table = scoring.calibrate(refs, config)
    (out / "weights.json").write_text(scoring.save_weight_table(table))
    header = pipeline.provenance(
        {**_hash_corpus(corpus_dir), **resource_paths}, shared
    )
    (out / "weights.meta.json").write_text(
        json.dumps(header, indent=2, sort_keys=True) + "\n"
    )
    n_tmr, n_c, n_p = table.calibration_counts
    print(
        f"calibrate: {n_tmr} reference representations, {n_c} concepts, "
        f"{n_p} properties, mean reference weight {table.mean_ref_weight:.6f} "
        f"-> {out / 'weights.json'}"
    )
    return 0


def cmd_classify(settings: Settings) -> int:
    corpus_dir = settings.require("corpus")
    weights_path = settings.require("weights")
    out = _out_dir(settings)
    shared = _shared_settings(settings)
    res, resource_paths = _load_resources(settings)
    articles = pipeline.load_corpus_dir(corpus_dir)
    jobs = settings.get("jobs", 1, int)
    config = scoring.ScoringConfig(lambda_=shared["lambda"], window=shared["window"])
    table = scoring.load_weight_table(Path(weights_path).read_bytes())
    threshold = scoring.compute_threshold(table.mean_ref_weight, config.lambda_)
    scored = pipeline.score_candidates(
        articles, res, table, config, shared["pattern"], jobs
    )
    from .tmr import tmr_to_json

    records = [
        {
            "uid": row.uid,
            "global_index": row.global_index,
            "text": row.text,
            "weight": row.weight,
            "threshold": threshold,
            "is_descriptive": scoring.classify(row.weight, threshold),
            "tmr": tmr_to_json(row.tmr),
        }
        for row in scored
    ]
    header = pipeline.provenance(
        {**_hash_corpus(corpus_dir), **resource_paths, "weights": weights_path},
        shared,
    )
    pipeline.write_jsonl(out / "scores.jsonl", header, records)
    n_pos = sum(1 for r in records if r["is_descriptive"])
    print(
        f"classify: {len(records)} candidates, {n_pos} descriptive at "
        f"lambda={config.lambda_:g} (threshold {threshold:.6f}) -> {out / 'scores.jsonl'}"
    )
    return 0


def _load_gold(path: str) -> dict[tuple[str, int], int]:
    gold = {}
    for line in Path(path).read_text().splitlines():
        if not line.strip():
            continue
        doc = json.loads(line)
        gold[(doc["uid"], int(doc["global_index"]))] = int(doc["label"])
    return gold


def cmd_evaluate(settings: Settings) -> int:
    scores_path = settings.require("scores")
    gold_path = settings.require("gold")
    weights_path = settings.require("weights")
    out = _out_dir(settings)
    shared = _shared_settings(settings)
    lambdas = [
        float(x)
        for x in str(settings.get("lambdas", DEFAULT_LAMBDAS)).split(",")
        if x.strip()
    ]
    table = scoring.load_weight_table(Path(weights_path).read_bytes())
    _, records = pipeline.read_jsonl(Path(scores_path))
    by_id = {(r["uid"], r["global_index"]): r for r in records}
    gold = _load_gold(gold_path)
    missing = sorted(k for k in gold if k not in by_id)
    if missing:
        raise AlignmentError(
            "gold ids missing from scores: "
            + ", ".join(f"{uid}@{gi}" for uid, gi in missing)
        )
    keys = sorted(gold)
    weights = [by_id[k]["weight"] for k in keys]
    labels = [gold[k] for k in keys]
    rows = scoring.lambda_sweep(weights, table.mean_ref_weight, lambdas, labels)
    (out / "sweep.tsv").write_text(scoring.sweep_to_tsv(rows))
    lam = shared["lambda"]
    threshold = scoring.compute_threshold(table.mean_ref_weight, lam)
    preds = [scoring.classify(w, threshold) for w in weights]
    headline = scoring.evaluate(preds, labels)
    headline["lambda"] = lam
    headline["threshold"] = threshold
    header = pipeline.provenance(
        {"scores": scores_path, "gold": gold_path, "weights": weights_path},
        {**shared, "lambdas": lambdas},
    )
    (out / "metrics.json").write_text(
        json.dumps({"provenance": header, "metrics": headline}, indent=2, sort_keys=True)
        + "\n"
    )
    (out / "sweep.meta.json").write_text(
        json.dumps(header, indent=2, sort_keys=True) + "\n"
    )
    print(
        f"evaluate: {len(keys)} labeled candidates, lambda={lam:g}: "
        f"accuracy {headline['accuracy']:.4f}, F1 {headline['f1']:.4f} "
        f"-> {out / 'sweep.tsv'}"
    )
    return 0


def cmd_baseline(settings: Settings) -> int:
    labeled_path = settings.require("labeled")
    out = _out_dir(settings)
    folds = settings.get("folds", 10, int)
    seed = settings.get("seed", 0, int)
    dataset = bl.load_labeled_jsonl(Path(labeled_path).read_bytes())
    report = bl.kfold_cv(dataset, k=folds, seed=seed)
    comparison_path = settings.get("concept_metrics")
    if comparison_path:
        concept_doc = json.loads(Path(comparison_path).read_text())
        report["concept_model"] = concept_doc.get("metrics", concept_doc)
    header = pipeline.provenance(
        {"labeled": labeled_path}, {"folds": folds, "seed": seed}
    )
    (out / "baseline.json").write_text(
        json.dumps({"provenance": header, "report": report}, indent=2, sort_keys=True)
        + "\n"
    )
    print(
        f"baseline: {len(dataset)} sentences, {folds}-fold CV: "
        f"mean accuracy {report['mean']['accuracy']:.4f}, "
        f"mean F1 {report['mean']['f1']:.4f} -> {out / 'baseline.json'}"
    )
    return 0


_COMMANDS = {
    "detect": cmd_detect,
    "calibrate": cmd_calibrate,
    "classify": cmd_classify,
    "evaluate": cmd_evaluate,
    "baseline": cmd_baseline,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    try:
        settings = Settings(args)
        return _COMMANDS[args.command](settings)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except FigdescError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # noqa: BLE001 - surfaced as an internal failure
        print(f"internal error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
