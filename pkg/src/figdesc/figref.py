"""Figure-reference detection and neighbor candidate selection.

A figure reference is a fig/figs/figure/figures token (optional trailing
period) followed by a label: optional S prefix plus digits, optionally
extended into ranges or lists with - / en-dash / comma. Matching is anchored
at word boundaries so tokens embedded in longer words never fire.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .corpus import Paragraph, Sentence
from .errors import PreconditionError

DEFAULT_PATTERN = r"\b(?:figures|figure|figs|fig)\.?\s*(S?\d+(?:\s*[-–,]\s*\d+)*)"

DEFAULT_WINDOW = 2


@dataclass(frozen=True)
class FigRefMatch:
    """One regex hit: the sentence's global index, parsed labels, char span."""

    global_index: int
    labels: tuple[str, ...]
    span: tuple[int, int]


@dataclass(frozen=True)
class CandidateSet:
    """Non-referring neighbors of one reference sentence, in document order."""

    ref_global_index: int
    neighbor_indices: tuple[int, ...]


@lru_cache(maxsize=32)
def _compile(pattern: str, ignore_case: bool) -> re.Pattern:
    return re.compile(pattern, re.IGNORECASE if ignore_case else 0)


def _parse_labels(raw: str) -> tuple[str, ...]:
    # Comma lists become separate labels; dash ranges stay whole.
    compact = re.sub(r"\s+", "", raw)
    return tuple(part for part in compact.split(",") if part)


def detect_figure_refs(
    sentence: Sentence,
    pattern: str | None = None,
    ignore_case: bool = True,
) -> list[FigRefMatch]:
    """All figure references in one sentence, left to right."""
    rx = _compile(pattern or DEFAULT_PATTERN, ignore_case)
    out = []
    for m in rx.finditer(sentence.text):
        out.append(
            FigRefMatch(sentence.global_index, _parse_labels(m.group(1)), m.span())
        )
    return out


def is_figure_referring(
    sentence: Sentence, pattern: str | None = None, ignore_case: bool = True
) -> bool:
    rx = _compile(pattern or DEFAULT_PATTERN, ignore_case)
    return rx.search(sentence.text) is not None


def select_neighbors(
    paragraph: Paragraph,
    ref_index_in_paragraph: int,
    window: int = DEFAULT_WINDOW,
    pattern: str | None = None,
    ignore_case: bool = True,
) -> CandidateSet:
    """Candidate sentences around one reference sentence.

    Takes the +-window sentences inside the same paragraph, clipped at the
    paragraph boundaries, and drops any neighbor that is itself figure-
    referring. The reference sentence must be figure-referring.
    """
    sentences = paragraph.sentences
    if not 0 <= ref_index_in_paragraph < len(sentences):
        raise PreconditionError(
            f"sentence index {ref_index_in_paragraph} outside paragraph of {len(sentences)}"
        )
    ref = sentences[ref_index_in_paragraph]
    if not is_figure_referring(ref, pattern, ignore_case):
        raise PreconditionError(
            f"sentence {ref.global_index} is not figure-referring"
        )
    neighbors = []
    lo = max(0, ref_index_in_paragraph - window)
    hi = min(len(sentences) - 1, ref_index_in_paragraph + window)
    for i in range(lo, hi + 1):
        if i == ref_index_in_paragraph:
            continue
        cand = sentences[i]
        if is_figure_referring(cand, pattern, ignore_case):
            continue
        neighbors.append(cand.global_index)
    return CandidateSet(ref.global_index, tuple(neighbors))
