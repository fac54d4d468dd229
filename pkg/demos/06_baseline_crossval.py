"""Bag-of-words baseline on the labeled sentence set.

Binary features, logistic regression trained by plain gradient descent,
k-fold cross-validation with near-equal fold sizes. Serves as the
comparison point for the ontology pipeline.
"""

from pathlib import Path

import numpy as np

from figdesc.baseline import (
    TrainConfig,
    build_vocab,
    featurize,
    kfold_cv,
    load_labeled_jsonl,
    to_matrix,
    tokenize,
    train_logreg,
)

ROOT = Path(__file__).resolve().parent.parent
dataset = load_labeled_jsonl((ROOT / "data" / "labeled.jsonl").read_bytes())
print(len(dataset), "labeled sentences,", sum(l for _, l in dataset), "positive")

# ---- features ----

text = dataset[0][0]
print("text:   ", text)
print("tokens: ", tokenize(text))

texts = [t for t, _ in dataset]
vocab = build_vocab(texts, min_freq=2)
print("vocabulary:", len(vocab), "types at document frequency >= 2")
print()

# ---- a single fit ----

X = to_matrix([featurize(t, vocab) for t in texts], len(vocab))
y = np.array([l for _, l in dataset])
model = train_logreg(X, y, TrainConfig())
train_acc = float((model.predict(X) == y).mean())
print("training accuracy of one full fit:", round(train_acc, 4))
print()

# ---- cross-validation ----

report = kfold_cv(dataset, k=10, seed=0)
print("10-fold cross-validation (seed 0):")
for i, fold in enumerate(report["folds"]):
    print("  fold %2d  accuracy %.3f  f1 %.3f" % (i, fold["accuracy"], fold["f1"]))
print("mean accuracy %.4f  mean f1 %.4f"
      % (report["mean"]["accuracy"], report["mean"]["f1"]))

# the same seed always yields the same folds, so these numbers are stable
