"""Synonym sets and word embeddings for verb sense expansion.

Verbs missing from the lexicon are rewritten to known lemmas by intersecting
their synonym list with their nearest embedding neighbors; with no embedding
entry at all, the synonym list alone is used in synset order.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass

import numpy as np

from .errors import EmbeddingFormatError, OovError, SchemaError

LOGGER = logging.getLogger(__name__)

DEFAULT_TOP_K = 20


@dataclass(frozen=True)
class SynsetLexicon:
    """lemma -> ordered synonym sets, each a tuple of lowercase lemmas."""

    entries: dict[str, tuple[tuple[str, ...], ...]]

    def synonyms(self, verb: str) -> set[str]:
        """Union of the verb's synsets, the verb itself removed."""
        verb = verb.lower()
        out: set[str] = set()
        for synset in self.entries.get(verb, ()):
            out.update(synset)
        out.discard(verb)
        return out

    def ordered_synonyms(self, verb: str) -> list[str]:
        """Synonyms in synset order, first occurrence wins, verb removed."""
        verb = verb.lower()
        seen: list[str] = []
        for synset in self.entries.get(verb, ()):
            for lemma in synset:
                if lemma != verb and lemma not in seen:
                    seen.append(lemma)
        return seen


def load_synsets(data: bytes | str) -> SynsetLexicon:
    """Parse the synset JSON: {lemma: [[lemma, ...], ...]}."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise SchemaError(f"synsets: malformed JSON at offset {e.pos}: {e.msg}") from e
    if not isinstance(doc, dict):
        raise SchemaError("synsets: top-level value must be an object")
    entries: dict[str, tuple[tuple[str, ...], ...]] = {}
    for lemma, synsets in doc.items():
        if lemma != lemma.lower():
            raise SchemaError(f"synsets: lemma {lemma!r} must be lowercase")
        if not isinstance(synsets, list):
            raise SchemaError(f"synsets: entry {lemma!r} must be a list of synsets")
        rows = []
        for synset in synsets:
            if not isinstance(synset, list) or not synset:
                raise SchemaError(f"synsets: {lemma!r} has an empty or non-list synset")
            for member in synset:
                if not isinstance(member, str) or member != member.lower():
                    raise SchemaError(
                        f"synsets: {lemma!r} member {member!r} must be a lowercase string"
                    )
            rows.append(tuple(synset))
        entries[lemma] = tuple(rows)
    return SynsetLexicon(entries)


class EmbeddingStore:
    """Dense word vectors with cosine nearest-neighbor lookup."""

    def __init__(self, dim: int, vectors: dict[str, np.ndarray]):
        self.dim = dim
        self._words = list(vectors)
        self._index = {w: i for i, w in enumerate(self._words)}
        self._matrix = (
            np.stack([vectors[w] for w in self._words])
            if vectors
            else np.zeros((0, dim))
        )
        norms = np.linalg.norm(self._matrix, axis=1)
        norms[norms == 0.0] = 1.0  # zero vectors get similarity 0 everywhere
        self._unit = self._matrix / norms[:, None]

    def __contains__(self, word: str) -> bool:
        return word in self._index

    def __len__(self) -> int:
        return len(self._words)

    def vector(self, word: str) -> np.ndarray:
        if word not in self._index:
            raise OovError(f"word {word!r} not in embedding vocabulary")
        return self._matrix[self._index[word]]

    def cosine(self, a: str, b: str) -> float:
        va, vb = self.vector(a), self.vector(b)
        na, nb = float(np.linalg.norm(va)), float(np.linalg.norm(vb))
        if na == 0.0 or nb == 0.0:
            return 0.0
        return float(np.dot(va, vb) / (na * nb))

    def top_k(self, word: str, k: int) -> list[tuple[str, float]]:
        """k nearest words by cosine, descending; ties broken lexicographically.

        The query word itself is excluded. Raises OovError for unknown words.
        """
        if word not in self._index:
            raise OovError(f"word {word!r} not in embedding vocabulary")
        qi = self._index[word]
        q = self._matrix[qi]
        qn = float(np.linalg.norm(q))
        sims = self._unit @ (q / qn if qn else q)
        order = sorted(
            (i for i in range(len(self._words)) if i != qi),
            key=lambda i: (-float(sims[i]), self._words[i]),
        )
        return [(self._words[i], float(sims[i])) for i in order[:k]]


def load_embeddings(data: bytes | str) -> EmbeddingStore:
    """Parse a text-format embedding file: '<vocab> <dim>' header, then rows.

    Every row must carry exactly dim finite values; violations raise with the
    offending line number. A repeated word keeps its last vector and logs a
    warning.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    lines = data.splitlines()
    if not lines:
        raise EmbeddingFormatError("line 1: missing header")
    header = lines[0].split()
    if len(header) != 2:
        raise EmbeddingFormatError("line 1: header must be '<vocab> <dim>'")
    try:
        _, dim = int(header[0]), int(header[1])
    except ValueError as e:
        raise EmbeddingFormatError("line 1: header must hold two integers") from e
    if dim <= 0:
        raise EmbeddingFormatError("line 1: dimension must be positive")
    vectors: dict[str, np.ndarray] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cols = line.split()
        if len(cols) != dim + 1:
            raise EmbeddingFormatError(
                f"line {lineno}: expected {dim + 1} columns, got {len(cols)}"
            )
        word = cols[0]
        try:
            vec = np.array([float(x) for x in cols[1:]], dtype=np.float64)
        except ValueError as e:
            raise EmbeddingFormatError(f"line {lineno}: non-numeric value") from e
        if not np.all(np.isfinite(vec)):
            raise EmbeddingFormatError(f"line {lineno}: non-finite value")
        if word in vectors:
            LOGGER.warning("duplicate embedding row for %r; keeping the last", word)
        vectors[word] = vec
    return EmbeddingStore(dim, vectors)


def candidate_verb_lemmas(
    synsets: SynsetLexicon,
    embeddings: EmbeddingStore,
    verb: str,
    k: int = DEFAULT_TOP_K,
) -> list[str]:
    """Replacement lemmas for a verb with no lexicon entry.

    Intersects the verb's synonyms with its k most embedding-similar words,
    ordered by embedding rank. A verb missing from the embedding vocabulary
    falls back to its synonyms in synset order.
    """
    verb = verb.lower()
    syns = synsets.synonyms(verb)
    if verb not in embeddings:
        return synsets.ordered_synonyms(verb)
    ranked = embeddings.top_k(verb, k)
    return [w for w, _ in ranked if w in syns]
