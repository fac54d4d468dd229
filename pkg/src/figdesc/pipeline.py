"""Corpus-level orchestration shared by the CLI commands.

Articles live one per file in a corpus directory (.json or .xml), with an
optional <stem>.conllu parse sidecar next to each. All fan-out is per
article; results are always reordered by (article uid, global sentence
index) before use, so worker scheduling never shows in the output.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .corpus import Article, attach_parses, load_article_json, load_article_xml
from .errors import ConfigError, SchemaError
from .figref import detect_figure_refs, is_figure_referring, select_neighbors
from .lexres import EmbeddingStore, SynsetLexicon, load_embeddings, load_synsets
from .ontology import OntologyGraph, load_ontology
from .scoring import ScoringConfig, WeightTable, sentence_weight
from .tmr import Tmr, build_sentence_tmr, load_gazetteer


@dataclass
class Resources:
    graph: OntologyGraph
    synsets: SynsetLexicon | None = None
    embeddings: EmbeddingStore | None = None
    gazetteer: frozenset[str] = frozenset()


def load_resources(
    ontology_path: str | Path,
    synsets_path: str | Path | None = None,
    embeddings_path: str | Path | None = None,
    gazetteer_path: str | Path | None = None,
) -> Resources:
    graph = load_ontology(Path(ontology_path).read_bytes())
    synsets = (
        load_synsets(Path(synsets_path).read_bytes()) if synsets_path else None
    )
    embeddings = (
        load_embeddings(Path(embeddings_path).read_bytes())
        if embeddings_path
        else None
    )
    gazetteer = (
        load_gazetteer(Path(gazetteer_path).read_bytes())
        if gazetteer_path
        else frozenset()
    )
    return Resources(graph, synsets, embeddings, gazetteer)


def load_corpus_dir(path: str | Path) -> list[Article]:
    """Load every article file in a directory, sorted by uid.

    JSON and XML articles are both accepted; a <stem>.conllu file next to an
    article attaches its parses. Duplicate uids reject the corpus.
    """
    root = Path(path)
    if not root.is_dir():
        raise ConfigError(f"corpus directory {root} does not exist")
    articles = []
    for file in sorted(root.iterdir()):
        if file.suffix == ".json":
            article = load_article_json(file.read_bytes())
        elif file.suffix == ".xml":
            article = load_article_xml(file.read_bytes())
        else:
            continue
        sidecar = file.with_suffix(".conllu")
        if sidecar.exists():
            article = attach_parses(article, sidecar.read_text())
        articles.append(article)
    seen: set[str] = set()
    for a in articles:
        if a.uid in seen:
            raise SchemaError(f"uid: duplicate article uid {a.uid!r}")
        seen.add(a.uid)
    return sorted(articles, key=lambda a: a.uid)


@dataclass
class ArticleDetection:
    uid: str
    refs: list[dict]  # one row per reference sentence
    candidate_indices: list[int]  # distinct, ascending global indices


def detect_article(
    article: Article, window: int, pattern: str | None = None
) -> ArticleDetection:
    """Reference sentences and their candidate neighbors for one article."""
    refs = []
    candidates: set[int] = set()
    for para in article.paragraphs:
        for local_idx, sentence in enumerate(para.sentences):
            matches = detect_figure_refs(sentence, pattern)
            if not matches:
                continue
            cand = select_neighbors(para, local_idx, window, pattern)
            labels = sorted({label for m in matches for label in m.labels})
            refs.append(
                {
                    "global_index": sentence.global_index,
                    "labels": labels,
                    "spans": [list(m.span) for m in matches],
                    "neighbors": list(cand.neighbor_indices),
                }
            )
            candidates.update(cand.neighbor_indices)
    return ArticleDetection(article.uid, refs, sorted(candidates))


def map_articles(articles: list[Article], fn, jobs: int = 1) -> list:
    """Apply fn to each article, optionally with a bounded worker pool.

    Results come back in article order regardless of completion order.
    """
    if jobs <= 1:
        return [fn(a) for a in articles]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, articles))


@dataclass
class ScoredSentence:
    uid: str
    global_index: int
    text: str
    tmr: Tmr
    weight: float


def reference_tmrs(
    articles: list[Article],
    resources: Resources,
    pattern: str | None = None,
    jobs: int = 1,
) -> list[Tmr]:
    """Representations of every figure-referring sentence, in corpus order."""

    def one(article: Article) -> list[Tmr]:
        out = []
        for sentence in article.sentences():
            if is_figure_referring(sentence, pattern):
                out.append(
                    build_sentence_tmr(
                        sentence,
                        resources.graph,
                        resources.gazetteer,
                        resources.synsets,
                        resources.embeddings,
                    )
                )
        return out

    return [t for per_article in map_articles(articles, one, jobs) for t in per_article]


def score_candidates(
    articles: list[Article],
    resources: Resources,
    table: WeightTable,
    config: ScoringConfig,
    pattern: str | None = None,
    jobs: int = 1,
) -> list[ScoredSentence]:
    """Weight every distinct candidate sentence, ordered by (uid, index)."""

    def one(article: Article) -> list[ScoredSentence]:
        detection = detect_article(article, config.window, pattern)
        by_global = {s.global_index: s for s in article.sentences()}
        rows = []
        for gidx in detection.candidate_indices:
            sentence = by_global[gidx]
            tmr = build_sentence_tmr(
                sentence,
                resources.graph,
                resources.gazetteer,
                resources.synsets,
                resources.embeddings,
            )
            rows.append(
                ScoredSentence(
                    article.uid,
                    gidx,
                    sentence.text,
                    tmr,
                    sentence_weight(tmr, table, config),
                )
            )
        return rows

    nested = map_articles(articles, one, jobs)
    flat = [r for rows in nested for r in rows]
    flat.sort(key=lambda r: (r.uid, r.global_index))
    return flat


# ---- provenance ----

def sha256_file(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def provenance(inputs: dict[str, str | Path | None], settings: dict) -> dict:
    """Input hashes plus resolved settings; no timestamps, no output paths."""
    hashes = {
        name: sha256_file(p) for name, p in sorted(inputs.items()) if p is not None
    }
    return {"inputs": hashes, "settings": dict(sorted(settings.items()))}


def write_jsonl(path: Path, header: dict, records: list[dict]) -> None:
    """JSONL with a first-line provenance record; keys sorted for stable bytes."""
    lines = [json.dumps({"provenance": header}, sort_keys=True)]
    lines.extend(json.dumps(r, sort_keys=True) for r in records)
    path.write_text("\n".join(lines) + "\n")


def read_jsonl(path: Path) -> tuple[dict, list[dict]]:
    """Counterpart of write_jsonl; returns (provenance, records)."""
    header: dict = {}
    records = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            doc = json.loads(line)
            if lineno == 1 and "provenance" in doc:
                header = doc["provenance"]
                continue
            records.append(doc)
    return header, records
