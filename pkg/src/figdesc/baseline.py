"""Bag-of-words logistic regression baseline.

Binary presence features over lowercase alphabetic tokens, L2-regularized
logistic loss minimized by full-batch gradient descent, and deterministic
k-fold cross-validation. The loss/gradient pair is exposed separately so the
analytic gradient can be checked against finite differences.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, DivergenceError, SchemaError

_TOKEN_RE = re.compile(r"[a-z]+")


def tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.lower())


def build_vocab(texts: list[str], min_freq: int = 1) -> dict[str, int]:
    """Token -> dense index, alphabetic order, built from training texts only."""
    counts: dict[str, int] = {}
    for text in texts:
        for tok in set(tokenize(text)):
            counts[tok] = counts.get(tok, 0) + 1
    kept = sorted(tok for tok, c in counts.items() if c >= min_freq)
    return {tok: i for i, tok in enumerate(kept)}


def featurize(text: str, vocab: dict[str, int]) -> dict[int, int]:
    """Sparse binary vector: {index: 1} for each vocabulary token present."""
    return {vocab[tok]: 1 for tok in set(tokenize(text)) if tok in vocab}


def to_matrix(features: list[dict[int, int]], vocab_size: int) -> np.ndarray:
    X = np.zeros((len(features), vocab_size))
    for row, feats in enumerate(features):
        for col in feats:
            X[row, col] = 1.0
    return X


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 0.5
    epochs: int = 300
    l2: float = 0.0
    seed: int = 0


@dataclass
class LogRegModel:
    weights: np.ndarray
    bias: float
    losses: list[float] = field(default_factory=list)

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        return _sigmoid(X @ self.weights + self.bias)

    def predict(self, X: np.ndarray) -> np.ndarray:
        return (self.predict_proba(X) >= 0.5).astype(int)


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z, dtype=np.float64)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def loss_and_gradient(
    w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, l2: float
) -> tuple[float, np.ndarray, float]:
    """Mean cross-entropy plus (l2/2)*||w||^2, with its exact gradient.

    The bias is not regularized. Probabilities are clipped only inside the
    logs, keeping loss and gradient consistent for finite-difference checks.
    """
    m = len(y)
    p = _sigmoid(X @ w + b)
    eps = 1e-12
    ce = -np.mean(
        y * np.log(np.clip(p, eps, None)) + (1 - y) * np.log(np.clip(1 - p, eps, None))
    )
    loss = float(ce + 0.5 * l2 * float(w @ w))
    grad_w = X.T @ (p - y) / m + l2 * w
    grad_b = float(np.mean(p - y))
    return loss, grad_w, grad_b


def train_logreg(X: np.ndarray, y: np.ndarray, config: TrainConfig) -> LogRegModel:
    """Full-batch gradient descent from zero weights; deterministic.

    Raises DivergenceError naming the epoch if the loss goes non-finite.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    w = np.zeros(X.shape[1])
    b = 0.0
    losses = []
    for epoch in range(config.epochs):
        loss, grad_w, grad_b = loss_and_gradient(w, b, X, y, config.l2)
        if not np.isfinite(loss):
            raise DivergenceError(f"non-finite loss at epoch {epoch}")
        losses.append(loss)
        w = w - config.learning_rate * grad_w
        b = b - config.learning_rate * grad_b
    return LogRegModel(w, b, losses)


def kfold_split(n: int, k: int, seed: int) -> list[np.ndarray]:
    """Deterministic shuffled index folds; sizes differ by at most one."""
    if k < 2 or k > n:
        raise ConfigError(f"fold count {k} invalid for {n} items")
    perm = np.random.default_rng(seed).permutation(n)
    base, extra = divmod(n, k)
    folds = []
    start = 0
    for i in range(k):
        size = base + (1 if i < extra else 0)
        folds.append(perm[start : start + size])
        start += size
    return folds


def _fold_metrics(preds: np.ndarray, gold: np.ndarray) -> dict[str, float]:
    tp = int(np.sum((preds == 1) & (gold == 1)))
    fp = int(np.sum((preds == 1) & (gold == 0)))
    fn = int(np.sum((preds == 0) & (gold == 1)))
    tn = int(np.sum((preds == 0) & (gold == 0)))
    total = len(gold)
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    return {
        "accuracy": (tp + tn) / total if total else 0.0,
        "f1": 2 * precision * recall / (precision + recall)
        if precision + recall
        else 0.0,
    }


def kfold_cv(
    dataset: list[tuple[str, int]],
    k: int = 10,
    seed: int = 0,
    train_config: TrainConfig | None = None,
    min_freq: int = 1,
) -> dict:
    """Cross-validate the baseline; vocabulary is rebuilt per training split.

    Returns per-fold accuracy/F1 plus their means.
    """
    cfg = train_config or TrainConfig()
    texts = [t for t, _ in dataset]
    labels = np.array([l for _, l in dataset])
    folds = kfold_split(len(dataset), k, seed)
    per_fold = []
    for test_idx in folds:
        test_mask = np.zeros(len(dataset), dtype=bool)
        test_mask[test_idx] = True
        train_texts = [t for t, m in zip(texts, test_mask) if not m]
        vocab = build_vocab(train_texts, min_freq)
        X_train = to_matrix([featurize(t, vocab) for t in train_texts], len(vocab))
        y_train = labels[~test_mask]
        model = train_logreg(X_train, y_train, cfg)
        test_texts = [t for t, m in zip(texts, test_mask) if m]
        X_test = to_matrix([featurize(t, vocab) for t in test_texts], len(vocab))
        preds = model.predict(X_test)
        per_fold.append(_fold_metrics(preds, labels[test_mask]))
    mean = {
        "accuracy": sum(f["accuracy"] for f in per_fold) / len(per_fold),
        "f1": sum(f["f1"] for f in per_fold) / len(per_fold),
    }
    return {"folds": per_fold, "mean": mean, "k": k, "seed": seed}


def load_labeled_jsonl(data: bytes | str) -> list[tuple[str, int]]:
    """Read {"text", "label", "source"} lines into (text, label) pairs."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    rows = []
    for lineno, line in enumerate(data.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as e:
            raise SchemaError(f"labeled line {lineno}: malformed JSON: {e.msg}") from e
        if "text" not in doc or "label" not in doc:
            raise SchemaError(f"labeled line {lineno}: needs text and label fields")
        label = doc["label"]
        if label not in (0, 1):
            raise SchemaError(f"labeled line {lineno}: label must be 0 or 1")
        rows.append((doc["text"], int(label)))
    return rows
