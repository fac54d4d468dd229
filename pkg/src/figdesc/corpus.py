"""Normalized article model and loaders.

An Article is a flat, ordered view of a scientific paper's body text:
paragraphs of sentences, each sentence carrying a stable global index and
optionally a dependency parse attached from a CoNLL-U sidecar. Loaders accept
either pre-segmented JSON, raw-paragraph JSON (segmented here), or a small
article XML dialect.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, replace
from xml.etree import ElementTree

from .errors import AlignmentError, ArticleParseError, SchemaError

# Trailing-period abbreviations that must not end a sentence. Checked
# case-insensitively against the text ending at a split candidate.
DEFAULT_ABBREVIATIONS: tuple[str, ...] = (
    "fig.",
    "figs.",
    "eq.",
    "eqs.",
    "et al.",
    "e.g.",
    "i.e.",
    "vs.",
    "cf.",
    "ref.",
    "refs.",
    "no.",
    "approx.",
)

# A sentence ends at . ! or ? followed by whitespace and an uppercase letter
# or digit. Everything else (decimal points, inline abbreviations) stays put.
_SPLIT_RE = re.compile(r"[.!?](?=\s+[A-Z0-9])")


@dataclass(frozen=True)
class Token:
    """One parsed token; head is a 1-based token index, 0 for the root."""

    index: int
    form: str
    lemma: str
    upos: str
    head: int
    deprel: str


@dataclass(frozen=True)
class ParsedSentence:
    tokens: tuple[Token, ...]

    def root(self) -> Token:
        return next(t for t in self.tokens if t.head == 0)


@dataclass(frozen=True)
class Sentence:
    paragraph_index: int
    index_in_paragraph: int
    global_index: int
    text: str
    parse: ParsedSentence | None = None


@dataclass(frozen=True)
class Paragraph:
    index: int
    sentences: tuple[Sentence, ...]


@dataclass(frozen=True)
class Article:
    uid: str
    title: str
    abstract: str
    paragraphs: tuple[Paragraph, ...]
    metadata: dict[str, str]

    def sentences(self) -> list[Sentence]:
        """All sentences in document order."""
        return [s for p in self.paragraphs for s in p.sentences]


def _is_protected(text_upto_punct: str, abbreviations: tuple[str, ...]) -> bool:
    lowered = text_upto_punct.lower()
    for abbr in abbreviations:
        if not lowered.endswith(abbr):
            continue
        before = len(lowered) - len(abbr)
        # Word boundary: the abbreviation must not be the tail of a longer word.
        if before == 0 or not lowered[before - 1].isalpha():
            return True
    return False


def segment_sentences(
    text: str, abbreviations: tuple[str, ...] = DEFAULT_ABBREVIATIONS
) -> list[str]:
    """Split paragraph text into sentences.

    Splits after . ! ? followed by whitespace and an uppercase letter or
    digit, unless the period closes a protected abbreviation. Lossless up to
    whitespace: joining the result with single spaces reproduces the
    whitespace-normalized input.
    """
    cuts = []
    for m in _SPLIT_RE.finditer(text):
        end = m.end()
        if text[end - 1] == "." and _is_protected(text[:end], abbreviations):
            continue
        cuts.append(end)
    out = []
    start = 0
    for cut in cuts:
        piece = text[start:cut].strip()
        if piece:
            out.append(piece)
        start = cut
    tail = text[start:].strip()
    if tail:
        out.append(tail)
    return out


def _build_article(
    uid: str,
    title: str,
    abstract: str,
    para_sentences: list[list[str]],
    metadata: dict[str, str],
) -> Article:
    paragraphs = []
    gidx = 0
    for pi, sents in enumerate(para_sentences):
        rows = []
        for si, text in enumerate(sents):
            stripped = text.strip()
            if not stripped:
                raise SchemaError(f"body[{pi}][{si}]: empty sentence text")
            rows.append(Sentence(pi, si, gidx, stripped))
            gidx += 1
        paragraphs.append(Paragraph(pi, tuple(rows)))
    return Article(uid, title, abstract, tuple(paragraphs), metadata)


def load_article_json(data: bytes | str) -> Article:
    """Parse one article from JSON bytes.

    Accepts either a pre-segmented "body" (list of sentence lists) or a raw
    "body_raw" (list of paragraph strings, segmented here). "uid" and one of
    the body fields are required.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise ArticleParseError(
            f"malformed JSON at byte offset {e.pos}: {e.msg}"
        ) from e
    if not isinstance(doc, dict):
        raise SchemaError("article: top-level value must be an object")
    uid = doc.get("uid")
    if not isinstance(uid, str) or not uid:
        raise SchemaError("uid: required non-empty string")
    title = doc.get("title", "")
    abstract = doc.get("abstract", "")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise SchemaError("metadata: must be an object")
    if "body" in doc:
        body = doc["body"]
        if not isinstance(body, list) or any(
            not isinstance(p, list) or any(not isinstance(s, str) for s in p)
            for p in body
        ):
            raise SchemaError("body: must be a list of sentence-string lists")
        para_sentences = [list(p) for p in body]
    elif "body_raw" in doc:
        raw = doc["body_raw"]
        if not isinstance(raw, list) or any(not isinstance(p, str) for p in raw):
            raise SchemaError("body_raw: must be a list of paragraph strings")
        para_sentences = [segment_sentences(p) for p in raw]
    else:
        raise SchemaError("body: required (either body or body_raw)")
    return _build_article(uid, title, abstract, para_sentences, dict(metadata))


def load_article_xml(data: bytes) -> Article:
    """Parse one article from XML: article > (title?, abstract?, body > para+).

    The <article> element may carry a uid= attribute; absent that, a
    deterministic content-hash uid is assigned.
    """
    try:
        root = ElementTree.fromstring(data)
    except ElementTree.ParseError as e:
        raise ArticleParseError(f"malformed XML at {e.position}: {e.msg}") from e
    if root.tag != "article":
        raise SchemaError("article: root element must be <article>")
    body = root.find("body")
    if body is None:
        raise SchemaError("body: required element missing")
    title_el = root.find("title")
    abstract_el = root.find("abstract")
    title = "".join(title_el.itertext()).strip() if title_el is not None else ""
    abstract = (
        "".join(abstract_el.itertext()).strip() if abstract_el is not None else ""
    )
    uid = root.get("uid", "")
    if not uid:
        raw = data if isinstance(data, bytes) else data.encode("utf-8")
        uid = "xml-" + hashlib.sha1(raw).hexdigest()[:12]
    para_sentences = []
    for para in body.findall("para"):
        text = " ".join("".join(para.itertext()).split())
        para_sentences.append(segment_sentences(text))
    return _build_article(uid, title, abstract, para_sentences, {})


def article_to_json(article: Article) -> dict:
    """Serializable form; load_article_json(json.dumps(...)) round-trips."""
    return {
        "uid": article.uid,
        "title": article.title,
        "abstract": article.abstract,
        "metadata": dict(article.metadata),
        "body": [[s.text for s in p.sentences] for p in article.paragraphs],
    }


# ---- CoNLL-U sidecars ----

def read_conllu(text: str) -> list[list[Token]]:
    """Read CoNLL-U blocks into token lists.

    Uses columns FORM, LEMMA, UPOS, HEAD, DEPREL of the 10-column format.
    Comment lines and multiword/empty-node ids (containing - or .) are
    skipped. One block per sentence, blocks separated by blank lines.
    """
    blocks: list[list[Token]] = []
    current: list[Token] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            if current:
                blocks.append(current)
                current = []
            continue
        if stripped.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise SchemaError(
                f"CoNLL-U line {lineno}: expected 10 tab-separated columns, got {len(cols)}"
            )
        tok_id = cols[0]
        if "-" in tok_id or "." in tok_id:
            continue
        try:
            index = int(tok_id)
            head = int(cols[6])
        except ValueError as e:
            raise SchemaError(f"CoNLL-U line {lineno}: non-integer id or head") from e
        current.append(Token(index, cols[1], cols[2], cols[3], head, cols[7]))
    if current:
        blocks.append(current)
    return blocks


def _validate_parse(tokens: list[Token], global_index: int, text: str) -> ParsedSentence:
    joined = "".join(t.form for t in tokens)
    if joined != "".join(text.split()):
        raise AlignmentError(
            f"sentence {global_index}: token forms do not match sentence text"
        )
    n = len(tokens)
    roots = [t for t in tokens if t.head == 0]
    if len(roots) != 1:
        raise AlignmentError(
            f"sentence {global_index}: expected exactly one root token, got {len(roots)}"
        )
    for t in tokens:
        if not 0 <= t.head <= n:
            raise AlignmentError(
                f"sentence {global_index}: head {t.head} out of range 0..{n}"
            )
    return ParsedSentence(tuple(tokens))


def attach_parses(article: Article, parse_doc: str | bytes) -> Article:
    """Return a copy of the article with sidecar parses attached.

    The sidecar must contain exactly one CoNLL-U block per article sentence,
    in document order, and each block's concatenated forms must equal the
    sentence text modulo whitespace. Idempotent for identical input.
    """
    if isinstance(parse_doc, bytes):
        parse_doc = parse_doc.decode("utf-8")
    blocks = read_conllu(parse_doc)
    sentences = article.sentences()
    if len(blocks) != len(sentences):
        raise AlignmentError(
            "parse sidecar has %d blocks for %d sentences; first divergence at global_index %d"
            % (len(blocks), len(sentences), min(len(blocks), len(sentences)))
        )
    parses = [
        _validate_parse(block, sent.global_index, sent.text)
        for block, sent in zip(blocks, sentences)
    ]
    by_global = {s.global_index: p for s, p in zip(sentences, parses)}
    paragraphs = tuple(
        Paragraph(
            p.index,
            tuple(replace(s, parse=by_global[s.global_index]) for s in p.sentences),
        )
        for p in article.paragraphs
    )
    return replace(article, paragraphs=paragraphs)
