"""Build the committed data fixtures: toy embeddings, the synthetic article
corpus, the parsed mini corpus with gold labels, and the labeled baseline set.

Everything is seeded, so reruns reproduce the committed files byte for byte.

Usage: python scripts/build_fixtures.py [--only embeddings|corpus|mini|labeled]
"""

from __future__ import annotations

import argparse
import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
PKG_DATA = ROOT / "src" / "figdesc" / "data"
DATA = ROOT / "data"

EMBED_DIM = 50
EMBED_VOCAB = 1000

# Words that move together get nearby vectors.
FAMILIES = [
    ["show", "exhibit", "display", "depict", "illustrate", "demonstrate",
     "visualize", "describe", "reveal", "present", "portray", "indicate",
     "establish", "uncover", "picture", "envision", "point"],
    ["plot", "graph", "chart"],
    ["compare", "contrast", "equate"],
    ["observe", "notice", "see"],
    ["obtain", "acquire", "get"],
    ["increase", "rise", "grow", "climb", "escalate", "expand", "intensify"],
    ["decrease", "decline", "drop", "diminish", "fall", "lessen", "shrink",
     "contract", "dwindle", "descend"],
    ["shift", "move", "displace"],
    ["vary", "change", "alter"],
    ["prepare", "make", "ready"],
    ["measure", "quantify", "gauge"],
    ["figure", "image", "panel"],
    ["curve", "line", "slope"],
    ["peak", "maximum", "shoulder"],
    ["spectrum", "spectra", "profile"],
    ["linear", "straight", "flat"],
    ["rapid", "fast", "quick"],
    ["same", "identical", "similar"],
]

SINGLETONS = [
    "signal", "sample", "detector", "intensity", "position", "shape", "color",
    "size", "vertical", "horizontal", "different", "dissimilar", "many", "few",
    "numerous", "small", "large", "good", "bad", "prior", "previous", "next",
    "subsequent", "last", "red", "blue", "green", "black", "slow", "gradual",
    "sharp", "round", "triangular", "rectangular", "region", "trend", "band",
    "energy", "temperature", "pressure", "film", "substrate", "value",
]


def build_embeddings(out_path: Path) -> None:
    rng = random.Random(20240817)
    vectors: dict[str, list[float]] = {}
    for family in FAMILIES:
        base = [rng.gauss(0.0, 1.0) for _ in range(EMBED_DIM)]
        for word in family:
            vectors[word] = [b + rng.gauss(0.0, 0.15) for b in base]
    for word in SINGLETONS:
        if word not in vectors:
            vectors[word] = [rng.gauss(0.0, 1.0) for _ in range(EMBED_DIM)]
    idx = 1
    while len(vectors) < EMBED_VOCAB:
        word = f"w{idx:04d}"
        idx += 1
        vectors[word] = [rng.gauss(0.0, 1.0) for _ in range(EMBED_DIM)]
    lines = [f"{len(vectors)} {EMBED_DIM}"]
    for word, vec in vectors.items():
        lines.append(word + " " + " ".join(f"{x:.6f}" for x in vec))
    out_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {out_path} ({len(vectors)} words, dim {EMBED_DIM})")


# ---- synthetic plain-text corpus (no parses) ----

PLAIN_SENTENCES = [
    "The samples were grown on silicon substrates.",
    "All measurements were carried out under vacuum.",
    "The optical response was recorded at regular intervals.",
    "These findings agree with earlier studies.",
    "The experimental setup is described elsewhere.",
    "A standard calibration procedure was applied before each run.",
    "The film thickness was estimated from the deposition rate.",
    "The substrate temperature was held constant.",
    "Data acquisition lasted several hours per configuration.",
    "The noise level stayed below one percent.",
    "This behavior has a significant effect on the final yield.",
    "The powder was annealed in flowing nitrogen.",
    "The beam current was monitored throughout the experiment.",
    "Each configuration was tested at least three times.",
    "The results were reproducible across all runs.",
    "Further experimental details are given in the appendix.",
    "The solvent was removed under reduced pressure.",
    "The reaction mixture was stirred overnight.",
    "A fresh target was used for every deposition.",
    "The pressure gauge was recalibrated weekly.",
]

REF_SENTENCES = [
    "Figure {a} shows the measured response.",
    "Fig. {a} displays the corresponding spectrum.",
    "Figs. {a}-{b} compare the two regimes.",
    "Figure S{a} presents the raw data.",
    "The resulting profile is plotted in Fig. {a}.",
    "FIG. {a} shows the low-temperature behavior.",
    "As shown in figure {a}, the signal saturates.",
    "Figs {a},{b} give an overview of the process.",
    "The geometry is sketched in Figure {a}.",
    "fig. {a} illustrates the proposed mechanism.",
]


def build_corpus137(out_dir: Path) -> None:
    rng = random.Random(13777)
    out_dir.mkdir(parents=True, exist_ok=True)
    total_sentences = 0
    for i in range(1, 138):
        uid = f"A{i:03d}"
        paragraphs = []
        for _ in range(rng.randint(2, 5)):
            n = rng.randint(2, 7)
            sents = [rng.choice(PLAIN_SENTENCES) for _ in range(n)]
            if rng.random() < 0.4:
                a = rng.randint(1, 12)
                b = a + rng.randint(1, 3)
                ref = rng.choice(REF_SENTENCES).format(a=a, b=b)
                sents[rng.randrange(len(sents))] = ref
                if rng.random() < 0.2:
                    a2 = rng.randint(1, 12)
                    ref2 = rng.choice(REF_SENTENCES).format(a=a2, b=a2 + 1)
                    sents[rng.randrange(len(sents))] = ref2
            paragraphs.append(sents)
        total_sentences += sum(len(p) for p in paragraphs)
        doc = {
            "uid": uid,
            "title": f"Synthetic study {i}",
            "abstract": "Automatically generated fixture article.",
            "metadata": {
                "year": str(rng.randint(2001, 2020)),
                "publisher": rng.choice(["north", "south", "east", "west"]),
            },
            "body": paragraphs,
        }
        (out_dir / f"{uid}.json").write_text(
            json.dumps(doc, indent=2, sort_keys=True) + "\n"
        )
    print(f"wrote {out_dir} (137 articles, {total_sentences} sentences)")


# ---- parsed mini corpus ----
#
# Each template is a token table: (form, lemma, upos, head, deprel), heads
# 1-based with 0 for the root. Reference templates hold a {N} slot whose form
# and lemma are substituted per instance.

REF_TEMPLATES = [
    # R1
    [("Figure", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("shows", "show", "VERB", 0, "root"), ("the", "the", "DET", 6, "det"),
     ("absorption", "absorption", "NOUN", 6, "compound"),
     ("spectrum", "spectrum", "NOUN", 3, "obj"), (".", ".", "PUNCT", 3, "punct")],
    # R2
    [("Fig.", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("displays", "display", "VERB", 0, "root"), ("a", "a", "DET", 6, "det"),
     ("linear", "linear", "ADJ", 6, "amod"), ("curve", "curve", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # R3
    [("Figs", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("compare", "compare", "VERB", 0, "root"), ("the", "the", "DET", 6, "det"),
     ("two", "two", "NUM", 6, "nummod"), ("spectra", "spectrum", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # R4
    [("Figure", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("exhibits", "exhibit", "VERB", 0, "root"), ("a", "a", "DET", 6, "det"),
     ("vertical", "vertical", "ADJ", 6, "amod"), ("line", "line", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # R5
    [("Fig.", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("depicts", "depict", "VERB", 0, "root"), ("the", "the", "DET", 6, "det"),
     ("peak", "peak", "NOUN", 6, "compound"),
     ("position", "position", "NOUN", 3, "obj"), (".", ".", "PUNCT", 3, "punct")],
    # R6
    [("Figure", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("illustrates", "illustrate", "VERB", 0, "root"), ("the", "the", "DET", 6, "det"),
     ("same", "same", "ADJ", 6, "amod"), ("trend", "trend", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # R7
    [("Figure", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("reveals", "reveal", "VERB", 0, "root"), ("a", "a", "DET", 6, "det"),
     ("rapid", "rapid", "ADJ", 6, "amod"), ("increase", "increase", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # R8
    [("Fig.", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("gives", "give", "VERB", 0, "root"), ("the", "the", "DET", 6, "det"),
     ("measured", "measured", "ADJ", 6, "amod"),
     ("intensity", "intensity", "NOUN", 3, "obj"), (".", ".", "PUNCT", 3, "punct")],
    # R9
    [("Figure", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("demonstrates", "demonstrate", "VERB", 0, "root"),
     ("good", "good", "ADJ", 5, "amod"),
     ("agreement", "agreement", "NOUN", 3, "obj"), (".", ".", "PUNCT", 3, "punct")],
    # R10: the reference lives in a prepositional phrase, not the frame
    [("The", "the", "DET", 2, "det"), ("spectra", "spectrum", "NOUN", 6, "nsubj"),
     ("in", "in", "ADP", 4, "case"), ("Figure", "figure", "NOUN", 2, "nmod"),
     ("{N}", "{N}", "NUM", 4, "nummod"), ("reveal", "reveal", "VERB", 0, "root"),
     ("a", "a", "DET", 9, "det"), ("flat", "flat", "ADJ", 9, "amod"),
     ("region", "region", "NOUN", 6, "obj"), (".", ".", "PUNCT", 6, "punct")],
    # R11
    [("Figure", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("plots", "plot", "VERB", 0, "root"), ("the", "the", "DET", 6, "det"),
     ("signal", "signal", "NOUN", 6, "compound"),
     ("intensity", "intensity", "NOUN", 3, "obj"), (".", ".", "PUNCT", 3, "punct")],
    # R12
    [("Fig.", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("shows", "show", "VERB", 0, "root"), ("TiO2", "TiO2", "PROPN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # R13
    [("Figure", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("shows", "show", "VERB", 0, "root"),
     ("graphene", "graphene", "NOUN", 3, "obj"), (".", ".", "PUNCT", 3, "punct")],
    # R14
    [("Figure", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("shows", "show", "VERB", 0, "root"), ("a", "a", "DET", 6, "det"),
     ("rapid", "rapid", "ADJ", 6, "amod"), ("decrease", "decrease", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # R15
    [("Fig.", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("displays", "display", "VERB", 0, "root"), ("the", "the", "DET", 6, "det"),
     ("red", "red", "ADJ", 6, "amod"), ("curve", "curve", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # R16
    [("We", "we", "PRON", 2, "nsubj"), ("observe", "observe", "VERB", 0, "root"),
     ("a", "a", "DET", 5, "det"), ("flat", "flat", "ADJ", 5, "amod"),
     ("region", "region", "NOUN", 2, "obj"), ("in", "in", "ADP", 7, "case"),
     ("Figure", "figure", "NOUN", 5, "nmod"), ("{N}", "{N}", "NUM", 7, "nummod"),
     (".", ".", "PUNCT", 2, "punct")],
    # R17
    [("Fig.", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("compares", "compare", "VERB", 0, "root"), ("the", "the", "DET", 7, "det"),
     ("last", "last", "ADJ", 7, "amod"), ("two", "two", "NUM", 7, "nummod"),
     ("spectra", "spectrum", "NOUN", 3, "obj"), (".", ".", "PUNCT", 3, "punct")],
    # R18
    [("Figure", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("shows", "show", "VERB", 0, "root"), ("a", "a", "DET", 6, "det"),
     ("sharp", "sharp", "ADJ", 6, "amod"), ("peak", "peak", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # R19
    [("Fig.", "figure", "NOUN", 3, "nsubj"), ("{N}", "{N}", "NUM", 1, "nummod"),
     ("displays", "display", "VERB", 0, "root"), ("the", "the", "DET", 6, "det"),
     ("detected", "detected", "ADJ", 6, "amod"), ("signal", "signal", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # R20-R24 keep the reference mention outside the frame so the calibration
    # set also covers low-weight reference sentences
    [("A", "a", "DET", 3, "det"), ("sharp", "sharp", "ADJ", 3, "amod"),
     ("peak", "peak", "NOUN", 5, "nsubjpass"), ("is", "be", "AUX", 5, "aux:pass"),
     ("observed", "observe", "VERB", 0, "root"), ("in", "in", "ADP", 7, "case"),
     ("Fig.", "figure", "NOUN", 5, "obl"), ("{N}", "{N}", "NUM", 7, "nummod"),
     (".", ".", "PUNCT", 5, "punct")],
    [("The", "the", "DET", 2, "det"), ("intensity", "intensity", "NOUN", 3, "nsubj"),
     ("increases", "increase", "VERB", 0, "root"),
     ("rapidly", "rapidly", "ADV", 3, "advmod"), ("in", "in", "ADP", 6, "case"),
     ("Fig.", "figure", "NOUN", 3, "obl"), ("{N}", "{N}", "NUM", 6, "nummod"),
     (".", ".", "PUNCT", 3, "punct")],
    [("The", "the", "DET", 2, "det"), ("signal", "signal", "NOUN", 3, "nsubj"),
     ("decreases", "decrease", "VERB", 0, "root"),
     ("slowly", "slowly", "ADV", 3, "advmod"), ("in", "in", "ADP", 6, "case"),
     ("Figure", "figure", "NOUN", 3, "obl"), ("{N}", "{N}", "NUM", 6, "nummod"),
     (".", ".", "PUNCT", 3, "punct")],
    [("The", "the", "DET", 3, "det"), ("peak", "peak", "NOUN", 3, "compound"),
     ("position", "position", "NOUN", 4, "nsubj"),
     ("shifts", "shift", "VERB", 0, "root"), ("upward", "upward", "ADV", 4, "advmod"),
     ("in", "in", "ADP", 7, "case"), ("Fig.", "figure", "NOUN", 4, "obl"),
     ("{N}", "{N}", "NUM", 7, "nummod"), (".", ".", "PUNCT", 4, "punct")],
    [("The", "the", "DET", 3, "det"), ("red", "red", "ADJ", 3, "amod"),
     ("curve", "curve", "NOUN", 4, "nsubj"), ("drops", "drop", "VERB", 0, "root"),
     ("quickly", "quickly", "ADV", 4, "advmod"), ("in", "in", "ADP", 7, "case"),
     ("Fig.", "figure", "NOUN", 4, "obl"), ("{N}", "{N}", "NUM", 7, "nummod"),
     (".", ".", "PUNCT", 4, "punct")],
]

DESCRIPTIVE = [
    # D1
    [("The", "the", "DET", 3, "det"), ("linear", "linear", "ADJ", 3, "amod"),
     ("curve", "curve", "NOUN", 4, "nsubj"), ("shows", "show", "VERB", 0, "root"),
     ("a", "a", "DET", 7, "det"), ("sharp", "sharp", "ADJ", 7, "amod"),
     ("peak", "peak", "NOUN", 4, "obj"), (".", ".", "PUNCT", 4, "punct")],
    # D2
    [("The", "the", "DET", 2, "det"), ("intensity", "intensity", "NOUN", 3, "nsubj"),
     ("increases", "increase", "VERB", 0, "root"),
     ("rapidly", "rapidly", "ADV", 3, "advmod"), (".", ".", "PUNCT", 3, "punct")],
    # D3: verb resolved through synonym/embedding expansion
    [("The", "the", "DET", 3, "det"), ("vertical", "vertical", "ADJ", 3, "amod"),
     ("line", "line", "NOUN", 4, "nsubj"), ("indicates", "indicate", "VERB", 0, "root"),
     ("the", "the", "DET", 7, "det"), ("peak", "peak", "NOUN", 7, "compound"),
     ("position", "position", "NOUN", 4, "obj"), (".", ".", "PUNCT", 4, "punct")],
    # D4
    [("The", "the", "DET", 2, "det"), ("spectra", "spectrum", "NOUN", 3, "nsubj"),
     ("exhibit", "exhibit", "VERB", 0, "root"), ("a", "a", "DET", 6, "det"),
     ("similar", "similar", "ADJ", 6, "amod"), ("shape", "shape", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # D5
    [("The", "the", "DET", 3, "det"), ("sharp", "sharp", "ADJ", 3, "amod"),
     ("peak", "peak", "NOUN", 4, "nsubj"), ("decreases", "decrease", "VERB", 0, "root"),
     ("rapidly", "rapidly", "ADV", 4, "advmod"), (".", ".", "PUNCT", 4, "punct")],
    # D6
    [("The", "the", "DET", 2, "det"), ("curves", "curve", "NOUN", 3, "nsubj"),
     ("show", "show", "VERB", 0, "root"), ("the", "the", "DET", 6, "det"),
     ("same", "same", "ADJ", 6, "amod"), ("trend", "trend", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # D7
    [("Both", "both", "DET", 2, "det"), ("curves", "curve", "NOUN", 3, "nsubj"),
     ("display", "display", "VERB", 0, "root"),
     ("identical", "identical", "ADJ", 5, "amod"),
     ("features", "feature", "NOUN", 3, "obj"), (".", ".", "PUNCT", 3, "punct")],
    # D8
    [("The", "the", "DET", 2, "det"), ("signal", "signal", "NOUN", 3, "nsubj"),
     ("grows", "grow", "VERB", 0, "root"), ("rapidly", "rapidly", "ADV", 3, "advmod"),
     (".", ".", "PUNCT", 3, "punct")],
    # D9
    [("The", "the", "DET", 3, "det"), ("last", "last", "ADJ", 3, "amod"),
     ("curve", "curve", "NOUN", 4, "nsubj"), ("reveals", "reveal", "VERB", 0, "root"),
     ("a", "a", "DET", 7, "det"), ("different", "different", "ADJ", 7, "amod"),
     ("slope", "slope", "NOUN", 4, "obj"), (".", ".", "PUNCT", 4, "punct")],
    # D10: unknown verb, properties only
    [("The", "the", "DET", 3, "det"), ("peak", "peak", "NOUN", 3, "compound"),
     ("position", "position", "NOUN", 4, "nsubj"), ("shifts", "shift", "VERB", 0, "root"),
     ("slowly", "slowly", "ADV", 4, "advmod"), (".", ".", "PUNCT", 4, "punct")],
    # D11
    [("The", "the", "DET", 3, "det"), ("blue", "blue", "ADJ", 3, "amod"),
     ("curve", "curve", "NOUN", 4, "nsubj"), ("exhibits", "exhibit", "VERB", 0, "root"),
     ("a", "a", "DET", 7, "det"), ("linear", "linear", "ADJ", 7, "amod"),
     ("region", "region", "NOUN", 4, "obj"), (".", ".", "PUNCT", 4, "punct")],
    # D12
    [("The", "the", "DET", 2, "det"), ("intensity", "intensity", "NOUN", 3, "nsubj"),
     ("decreases", "decrease", "VERB", 0, "root"),
     ("gradually", "gradually", "ADV", 3, "advmod"), (".", ".", "PUNCT", 3, "punct")],
    # D13
    [("The", "the", "DET", 2, "det"), ("spectra", "spectrum", "NOUN", 3, "nsubj"),
     ("reveal", "reveal", "VERB", 0, "root"), ("many", "many", "ADJ", 6, "amod"),
     ("small", "small", "ADJ", 6, "amod"), ("peaks", "peak", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # D14: two modifiers land on the same attribute
    [("A", "a", "DET", 4, "det"), ("sharp", "sharp", "ADJ", 4, "amod"),
     ("triangular", "triangular", "ADJ", 4, "amod"),
     ("peak", "peak", "NOUN", 6, "nsubjpass"), ("is", "be", "AUX", 6, "aux:pass"),
     ("observed", "observe", "VERB", 0, "root"), (".", ".", "PUNCT", 6, "punct")],
    # D15
    [("The", "the", "DET", 3, "det"), ("red", "red", "ADJ", 3, "amod"),
     ("line", "line", "NOUN", 4, "nsubj"), ("drops", "drop", "VERB", 0, "root"),
     ("rapidly", "rapidly", "ADV", 4, "advmod"), ("above", "above", "ADP", 8, "case"),
     ("this", "this", "DET", 8, "det"), ("value", "value", "NOUN", 4, "obl"),
     (".", ".", "PUNCT", 4, "punct")],
    # D16
    [("The", "the", "DET", 3, "det"), ("first", "first", "ADJ", 3, "amod"),
     ("spectrum", "spectrum", "NOUN", 4, "nsubj"), ("gives", "give", "VERB", 0, "root"),
     ("a", "a", "DET", 7, "det"), ("good", "good", "ADJ", 7, "amod"),
     ("signal", "signal", "NOUN", 4, "obj"), (".", ".", "PUNCT", 4, "punct")],
    # D17: the subject modifier is a gazetteer chemical
    [("The", "the", "DET", 3, "det"), ("gold", "gold", "ADJ", 3, "amod"),
     ("sample", "sample", "NOUN", 4, "nsubj"), ("shows", "show", "VERB", 0, "root"),
     ("a", "a", "DET", 7, "det"), ("vertical", "vertical", "ADJ", 7, "amod"),
     ("line", "line", "NOUN", 4, "obj"), (".", ".", "PUNCT", 4, "punct")],
    # D18
    [("The", "the", "DET", 3, "det"), ("next", "next", "ADJ", 3, "amod"),
     ("spectrum", "spectrum", "NOUN", 4, "nsubj"), ("shows", "show", "VERB", 0, "root"),
     ("a", "a", "DET", 7, "det"), ("similar", "similar", "ADJ", 7, "amod"),
     ("pattern", "pattern", "NOUN", 4, "obj"), (".", ".", "PUNCT", 4, "punct")],
    # D19
    [("The", "the", "DET", 2, "det"), ("sample", "sample", "NOUN", 3, "nsubj"),
     ("reveals", "reveal", "VERB", 0, "root"),
     ("numerous", "numerous", "ADJ", 6, "amod"), ("dark", "dark", "ADJ", 6, "amod"),
     ("regions", "region", "NOUN", 3, "obj"), (".", ".", "PUNCT", 3, "punct")],
    # D20: unknown verb, grounded subject plus bare properties
    [("The", "the", "DET", 2, "det"), ("curves", "curve", "NOUN", 3, "nsubj"),
     ("keep", "keep", "VERB", 0, "root"), ("the", "the", "DET", 6, "det"),
     ("same", "same", "ADJ", 6, "amod"), ("shape", "shape", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
]

NONDESCRIPTIVE = [
    # N1
    [("The", "the", "DET", 2, "det"), ("samples", "sample", "NOUN", 4, "nsubjpass"),
     ("were", "be", "AUX", 4, "aux:pass"), ("prepared", "prepare", "VERB", 0, "root"),
     ("by", "by", "ADP", 7, "case"), ("standard", "standard", "ADJ", 7, "amod"),
     ("methods", "method", "NOUN", 4, "obl"), (".", ".", "PUNCT", 4, "punct")],
    # N2
    [("The", "the", "DET", 2, "det"),
     ("measurements", "measurement", "NOUN", 4, "nsubjpass"),
     ("were", "be", "AUX", 4, "aux:pass"), ("carried", "carry", "VERB", 0, "root"),
     ("out", "out", "ADP", 4, "compound:prt"), ("at", "at", "ADP", 8, "case"),
     ("room", "room", "NOUN", 8, "compound"),
     ("temperature", "temperature", "NOUN", 4, "obl"), (".", ".", "PUNCT", 4, "punct")],
    # N3
    [("This", "this", "DET", 2, "det"), ("result", "result", "NOUN", 3, "nsubj"),
     ("agrees", "agree", "VERB", 0, "root"), ("with", "with", "ADP", 6, "case"),
     ("previous", "previous", "ADJ", 6, "amod"), ("reports", "report", "NOUN", 3, "obl"),
     (".", ".", "PUNCT", 3, "punct")],
    # N4
    [("The", "the", "DET", 2, "det"),
     ("experiments", "experiment", "NOUN", 4, "nsubjpass"),
     ("were", "be", "AUX", 4, "aux:pass"), ("repeated", "repeat", "VERB", 0, "root"),
     ("three", "three", "NUM", 6, "nummod"), ("times", "time", "NOUN", 4, "obl"),
     (".", ".", "PUNCT", 4, "punct")],
    # N5
    [("The", "the", "DET", 2, "det"), ("authors", "author", "NOUN", 3, "nsubj"),
     ("thank", "thank", "VERB", 0, "root"), ("the", "the", "DET", 6, "det"),
     ("technical", "technical", "ADJ", 6, "amod"), ("staff", "staff", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # N6
    [("No", "no", "DET", 3, "det"), ("further", "further", "ADJ", 3, "amod"),
     ("treatment", "treatment", "NOUN", 5, "nsubjpass"),
     ("was", "be", "AUX", 5, "aux:pass"), ("applied", "apply", "VERB", 0, "root"),
     (".", ".", "PUNCT", 5, "punct")],
    # N7: a table mention must stay a negative
    [("These", "these", "DET", 2, "det"), ("values", "value", "NOUN", 4, "nsubjpass"),
     ("are", "be", "AUX", 4, "aux:pass"), ("listed", "list", "VERB", 0, "root"),
     ("in", "in", "ADP", 6, "case"), ("Table", "table", "PROPN", 4, "obl"),
     ("2", "2", "NUM", 6, "nummod"), (".", ".", "PUNCT", 4, "punct")],
    # N8
    [("The", "the", "DET", 2, "det"), ("beamline", "beamline", "NOUN", 3, "nsubj"),
     ("operated", "operate", "VERB", 0, "root"), ("at", "at", "ADP", 7, "case"),
     ("a", "a", "DET", 7, "det"), ("fixed", "fixed", "ADJ", 7, "amod"),
     ("energy", "energy", "NOUN", 3, "obl"), (".", ".", "PUNCT", 3, "punct")],
    # N9
    [("The", "the", "DET", 2, "det"), ("powder", "powder", "NOUN", 4, "nsubjpass"),
     ("was", "be", "AUX", 4, "aux:pass"), ("annealed", "anneal", "VERB", 0, "root"),
     ("for", "for", "ADP", 7, "case"), ("two", "two", "NUM", 7, "nummod"),
     ("hours", "hour", "NOUN", 4, "obl"), (".", ".", "PUNCT", 4, "punct")],
    # N10
    [("The", "the", "DET", 2, "det"), ("data", "data", "NOUN", 4, "nsubjpass"),
     ("were", "be", "AUX", 4, "aux:pass"), ("collected", "collect", "VERB", 0, "root"),
     ("during", "during", "ADP", 8, "case"), ("the", "the", "DET", 8, "det"),
     ("second", "second", "ADJ", 8, "amod"), ("run", "run", "NOUN", 4, "obl"),
     (".", ".", "PUNCT", 4, "punct")],
    # N11: lone grounded property, stays under threshold
    [("Many", "many", "ADJ", 2, "amod"), ("groups", "group", "NOUN", 3, "nsubj"),
     ("reported", "report", "VERB", 0, "root"), ("this", "this", "DET", 5, "det"),
     ("effect", "effect", "NOUN", 3, "obj"), ("earlier", "earlier", "ADV", 3, "advmod"),
     (".", ".", "PUNCT", 3, "punct")],
    # N12
    [("The", "the", "DET", 2, "det"), ("setup", "setup", "NOUN", 3, "nsubj"),
     ("required", "require", "VERB", 0, "root"), ("careful", "careful", "ADJ", 5, "amod"),
     ("alignment", "alignment", "NOUN", 3, "obj"), (".", ".", "PUNCT", 3, "punct")],
    # N13
    [("The", "the", "DET", 2, "det"), ("solution", "solution", "NOUN", 4, "nsubjpass"),
     ("was", "be", "AUX", 4, "aux:pass"), ("stirred", "stir", "VERB", 0, "root"),
     ("overnight", "overnight", "ADV", 4, "advmod"), (".", ".", "PUNCT", 4, "punct")],
    # N14
    [("Further", "further", "ADJ", 2, "amod"), ("details", "detail", "NOUN", 3, "nsubj"),
     ("appear", "appear", "VERB", 0, "root"), ("in", "in", "ADP", 7, "case"),
     ("the", "the", "DET", 7, "det"),
     ("supplementary", "supplementary", "ADJ", 7, "amod"),
     ("material", "material", "NOUN", 3, "obl"), (".", ".", "PUNCT", 3, "punct")],
    # N15
    [("The", "the", "DET", 2, "det"),
     ("uncertainty", "uncertainty", "NOUN", 3, "nsubj"),
     ("remains", "remain", "VERB", 0, "root"), ("below", "below", "ADP", 6, "case"),
     ("one", "one", "NUM", 6, "nummod"), ("percent", "percent", "NOUN", 3, "obl"),
     (".", ".", "PUNCT", 3, "punct")],
    # N16
    [("This", "this", "DET", 2, "det"), ("procedure", "procedure", "NOUN", 3, "nsubj"),
     ("follows", "follow", "VERB", 0, "root"), ("our", "our", "PRON", 6, "nmod:poss"),
     ("earlier", "earlier", "ADJ", 6, "amod"), ("work", "work", "NOUN", 3, "obj"),
     (".", ".", "PUNCT", 3, "punct")],
    # N17: verb resolves to a known event but nothing else grounds
    [("The", "the", "DET", 2, "det"), ("team", "team", "NOUN", 3, "nsubj"),
     ("acquired", "acquire", "VERB", 0, "root"),
     ("additional", "additional", "ADJ", 5, "amod"),
     ("beamtime", "beamtime", "NOUN", 3, "obj"), ("last", "last", "ADJ", 7, "amod"),
     ("year", "year", "NOUN", 3, "obl:tmod"), (".", ".", "PUNCT", 3, "punct")],
    # N18
    [("The", "the", "DET", 2, "det"),
     ("calibration", "calibration", "NOUN", 3, "nsubj"),
     ("used", "use", "VERB", 0, "root"), ("a", "a", "DET", 7, "det"),
     ("standard", "standard", "ADJ", 7, "amod"),
     ("reference", "reference", "NOUN", 7, "compound"),
     ("sample", "sample", "NOUN", 3, "obj"), (".", ".", "PUNCT", 3, "punct")],
    # N19
    [("The", "the", "DET", 3, "det"), ("chamber", "chamber", "NOUN", 3, "compound"),
     ("pressure", "pressure", "NOUN", 4, "nsubj"), ("stayed", "stay", "VERB", 0, "root"),
     ("constant", "constant", "ADJ", 4, "xcomp"),
     ("throughout", "throughout", "ADV", 4, "advmod"), (".", ".", "PUNCT", 4, "punct")],
    # N20
    [("Funding", "funding", "NOUN", 2, "nsubj"), ("came", "come", "VERB", 0, "root"),
     ("from", "from", "ADP", 6, "case"), ("several", "several", "ADJ", 6, "amod"),
     ("national", "national", "ADJ", 6, "amod"),
     ("agencies", "agency", "NOUN", 2, "obl"), (".", ".", "PUNCT", 2, "punct")],
]


def detok(forms: list[str]) -> str:
    text = " ".join(forms)
    return text.replace(" .", ".").replace(" ,", ",")


def template_text(rows: list[tuple]) -> str:
    return detok([r[0] for r in rows])


def substitute(rows: list[tuple], label: str) -> list[tuple]:
    return [
        (label if form == "{N}" else form, label if lemma == "{N}" else lemma,
         upos, head, deprel)
        for form, lemma, upos, head, deprel in rows
    ]


def check_template(rows: list[tuple]) -> None:
    roots = [r for r in rows if r[3] == 0]
    assert len(roots) == 1, f"template with {len(roots)} roots: {rows}"
    for _, _, _, head, _ in rows:
        assert 0 <= head <= len(rows), f"head out of range in {rows}"


def conllu_block(rows: list[tuple]) -> str:
    lines = []
    for i, (form, lemma, upos, head, deprel) in enumerate(rows, start=1):
        lines.append(
            "\t".join([str(i), form, lemma, upos, "_", "_", str(head), deprel, "_", "_"])
        )
    return "\n".join(lines)


def build_minicorpus(out_dir: Path) -> None:
    for rows in REF_TEMPLATES + DESCRIPTIVE + NONDESCRIPTIVE:
        check_template(rows)
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(90125)
    gold_lines = []
    for i in range(20):
        uid = f"M{i + 1:03d}"
        refs = [
            substitute(
                REF_TEMPLATES[(3 * i + j) % len(REF_TEMPLATES)],
                str(rng.randint(1, 9)),
            )
            for j in range(3)
        ]
        desc = DESCRIPTIVE[i]
        nond = NONDESCRIPTIVE[i]
        left, right = (desc, nond) if i % 2 == 0 else (nond, desc)
        filler_idx = [(i + 5) % 20, (i + 11) % 20, (i + 7) % 20, (i + 13) % 20]
        filler_idx = [(j + 1) % 20 if j == i else j for j in filler_idx]
        fillers = [NONDESCRIPTIVE[j] for j in filler_idx]
        paragraphs = [
            [fillers[0], fillers[1]],
            [refs[0], refs[1]],
            [left, refs[2], right],
            [fillers[2], fillers[3]],
        ]
        flat = [rows for para in paragraphs for rows in para]
        body = [[template_text(rows) for rows in para] for para in paragraphs]
        doc = {
            "uid": uid,
            "title": f"Mini study {i + 1}",
            "abstract": "Hand-built fixture article with parses.",
            "metadata": {"year": "2019"},
            "body": body,
        }
        (out_dir / f"{uid}.json").write_text(
            json.dumps(doc, indent=2, sort_keys=True) + "\n"
        )
        (out_dir / f"{uid}.conllu").write_text(
            "\n\n".join(conllu_block(rows) for rows in flat) + "\n"
        )
        # candidate positions: paragraph 2 holds [left, ref, right] at
        # global indices 4 and 6 (2 + 2 + 3 + 2 sentence layout)
        left_label = 1 if left is desc else 0
        gold_lines.append(
            json.dumps(
                {"uid": uid, "global_index": 4, "label": left_label,
                 "text": template_text(left)},
                sort_keys=True,
            )
        )
        gold_lines.append(
            json.dumps(
                {"uid": uid, "global_index": 6, "label": 1 - left_label,
                 "text": template_text(right)},
                sort_keys=True,
            )
        )
    (out_dir / "gold.jsonl").write_text("\n".join(gold_lines) + "\n")
    print(f"wrote {out_dir} (20 articles, 40 labeled candidates)")


DESCRIPTIVE_STUBS = [
    "the {adj} curve shows a {adj2} peak",
    "the intensity {verb} rapidly in this region",
    "the {adj} line indicates the peak position",
    "both spectra exhibit a {adj} shape",
    "a {adj} decrease is observed near the edge",
    "the signal grows quickly above threshold",
    "the {adj} band remains flat across the range",
    "many small peaks appear in the spectrum",
]

NONDESCRIPTIVE_STUBS = [
    "the samples were prepared by {adj} methods",
    "the measurements were repeated {n} times",
    "this result agrees with earlier reports",
    "the powder was annealed for {n} hours",
    "the authors thank the technical staff",
    "the beamline operated at a fixed energy",
    "further details appear in the appendix",
    "the solution was stirred overnight at {n} degrees",
]

ADJS = ["linear", "vertical", "sharp", "flat", "rapid", "red", "blue", "similar"]
VERBS = ["increases", "decreases", "rises", "drops"]


def build_labeled(out_path: Path) -> None:
    rng = random.Random(5150)
    rows = []
    for _ in range(100):
        stub = rng.choice(DESCRIPTIVE_STUBS)
        text = stub.format(
            adj=rng.choice(ADJS), adj2=rng.choice(ADJS), verb=rng.choice(VERBS),
            n=rng.randint(2, 9),
        )
        rows.append({"text": text.capitalize() + ".", "label": 1, "source": "synthetic"})
    for _ in range(100):
        stub = rng.choice(NONDESCRIPTIVE_STUBS)
        text = stub.format(adj=rng.choice(["standard", "common"]), n=rng.randint(2, 9))
        rows.append({"text": text.capitalize() + ".", "label": 0, "source": "synthetic"})
    rng.shuffle(rows)
    out_path.write_text(
        "\n".join(json.dumps(r, sort_keys=True) for r in rows) + "\n"
    )
    print(f"wrote {out_path} ({len(rows)} labeled sentences)")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--only", choices=["embeddings", "corpus", "mini", "labeled"], default=None
    )
    args = parser.parse_args()
    PKG_DATA.mkdir(parents=True, exist_ok=True)
    DATA.mkdir(parents=True, exist_ok=True)
    if args.only in (None, "embeddings"):
        build_embeddings(PKG_DATA / "embeddings.txt")
    if args.only in (None, "corpus"):
        build_corpus137(DATA / "corpus137")
    if args.only in (None, "mini"):
        build_minicorpus(DATA / "minicorpus")
    if args.only in (None, "labeled"):
        build_labeled(DATA / "labeled.jsonl")


if __name__ == "__main__":
    main()
