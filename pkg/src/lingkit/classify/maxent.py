"""Maximum entropy classification with iterative scaling training.

The model scores a class ``c`` for an input ``x`` as

    P(c | x)  proportional to  exp( sum of weights[j, c] for j in x )

over joint (input feature, class) parameters.  Training raises or
lowers weights until, for every retained joint feature, the model's
expected feature count matches the empirical count from the corpus.
Two classic fitting procedures are provided:

* Generalized iterative scaling updates every weight by
  ``(1/C) * log(empirical / model)`` where ``C`` is the constant
  per-example feature total.  A correction feature pads every example
  up to ``C``; with class-joint features its value never depends on
  the class, so its weight provably stays at zero, and it is kept only
  to make the constant-sum construction explicit.
* Improved iterative scaling solves, for each weight separately, the
  one-dimensional update equation obtained by partitioning examples on
  their feature totals.  The equation is monotone in the update, so a
  plain bisection finds it.

Joint features that never fire in the corpus are excluded (their
constraint would push weights to minus infinity) with a warning.
Training records the worst constraint violation after every iteration.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field

import numpy as np

from .features import FeatureVector, LabeledExample

DEFAULT_TOLERANCE = 1e-4
DEFAULT_MAX_ITER = 100
_BISECT_STEPS = 50
_BISECT_BRACKET = 1e-10


@dataclass
class MaxentModel:
    classes: list[str]
    dimension: int
    weights: np.ndarray  # shape (dimension, len(classes))
    correction_weight: float = 0.0
    constant_sum: int = 0
    iterations: int = 0
    final_violation: float = 0.0
    violations: list[float] = field(default_factory=list)

    def posterior(self, x: FeatureVector) -> dict[str, float]:
        scores = np.zeros(len(self.classes))
        for j in x.on:
            scores += self.weights[j]
        # The correction feature's value is the same for every class,
        # so it cancels in the normalization and is omitted here.
        scores -= scores.max()
        expd = np.exp(scores)
        expd /= expd.sum()
        return {c: float(p) for c, p in zip(self.classes, expd)}

    def classify(self, x: FeatureVector) -> tuple[str, dict[str, float]]:
        posterior = self.posterior(x)
        best = min(self.classes, key=lambda c: (-posterior[c], c))
        return best, posterior

    def to_json(self, vocabulary: list[str] | None = None) -> str:
        return json.dumps(
            {
                "kind": "maxent",
                "classes": self.classes,
                "vocabulary": vocabulary or [],
                "weights": self.weights.tolist(),
                "correction_weight": self.correction_weight,
                "constant_sum": self.constant_sum,
            },
            indent=2,
        )


def maxent_from_json(text: str) -> tuple[MaxentModel, list[str]]:
    data = json.loads(text)
    weights = np.array(data["weights"], dtype=float)
    if weights.size == 0:
        weights = weights.reshape(0, len(data["classes"]))
    return (
        MaxentModel(
            classes=list(data["classes"]),
            dimension=weights.shape[0],
            weights=weights,
            correction_weight=data.get("correction_weight", 0.0),
            constant_sum=data.get("constant_sum", 0),
        ),
        list(data["vocabulary"]),
    )


def _posteriors(x_matrix: np.ndarray, weights: np.ndarray) -> np.ndarray:
    scores = x_matrix @ weights
    scores -= scores.max(axis=1, keepdims=True)
    expd = np.exp(scores)
    return expd / expd.sum(axis=1, keepdims=True)


def train_maxent(
    corpus: list[LabeledExample],
    algorithm: str = "gis",
    max_iter: int = DEFAULT_MAX_ITER,
    tol: float = DEFAULT_TOLERANCE,
    classes: list[str] | None = None,
) -> MaxentModel:
    """Fit weights until every retained constraint holds within ``tol``
    or ``max_iter`` iterations have run."""
    if algorithm not in ("gis", "iis"):
        raise ValueError(f"algorithm must be 'gis' or 'iis', got {algorithm!r}")
    if classes is None:
        classes = sorted({ex.label for ex in corpus})
    class_index = {c: k for k, c in enumerate(classes)}
    n_classes = len(classes)
    dimension = corpus[0].features.dimension if corpus else 0
    n = len(corpus)

    x_matrix = np.zeros((n, dimension))
    labels = np.zeros(n, dtype=int)
    for row, ex in enumerate(corpus):
        for j in ex.features.on:
            x_matrix[row, j] = 1.0
        labels[row] = class_index[ex.label]

    empirical = np.zeros((dimension, n_classes))
    for row, ex in enumerate(corpus):
        empirical[:, labels[row]] += x_matrix[row]
    empirical /= max(n, 1)

    retained = empirical > 0
    excluded = int(dimension * n_classes - retained.sum())
    if excluded:
        warnings.warn(
            f"excluding {excluded} joint feature(s) with zero empirical count",
            stacklevel=2,
        )

    weights = np.zeros((dimension, n_classes))
    constant_sum = int(x_matrix.sum(axis=1).max()) if n and dimension else 0
    violations: list[float] = []
    iterations = 0

    def model_expectation() -> tuple[np.ndarray, np.ndarray]:
        post = _posteriors(x_matrix, weights)
        return (x_matrix.T @ post) / max(n, 1), post

    expectation, post = model_expectation()
    violation = _max_violation(empirical, expectation, retained)
    violations.append(violation)

    while violation >= tol and iterations < max_iter and retained.any():
        if algorithm == "gis":
            with np.errstate(divide="ignore", invalid="ignore"):
                delta = np.where(
                    retained, np.log(empirical) - np.log(expectation), 0.0
                ) / constant_sum
            weights += delta
        else:
            weights += _iis_updates(x_matrix, post, empirical, retained, n)
        iterations += 1
        expectation, post = model_expectation()
        violation = _max_violation(empirical, expectation, retained)
        violations.append(violation)

    return MaxentModel(
        classes=list(classes),
        dimension=dimension,
        weights=weights,
        correction_weight=0.0,
        constant_sum=constant_sum,
        iterations=iterations,
        final_violation=violation,
        violations=violations,
    )


def _max_violation(empirical, expectation, retained) -> float:
    if not retained.any():
        return 0.0
    return float(np.abs(np.where(retained, empirical - expectation, 0.0)).max())


def _iis_updates(x_matrix, post, empirical, retained, n) -> np.ndarray:
    """One IIS step: solve each weight's update equation by bisection.

    For joint feature (j, c), the update delta solves

        sum over examples i containing j of
            P(c | x_i) * exp(delta * s(i, c)) / n  =  empirical[j, c]

    where s(i, c) counts the retained features of class c active in
    example i.  Every contributing example has s >= 1 (feature j itself
    is retained), so the left side is strictly increasing in delta.
    """
    dimension, n_classes = empirical.shape
    # s(i, c): per-example totals of retained features, per class.
    totals = x_matrix @ retained.astype(float)
    deltas = np.zeros_like(empirical)
    for j in range(dimension):
        docs = np.flatnonzero(x_matrix[:, j] > 0)
        if docs.size == 0:
            continue
        for c in range(n_classes):
            if not retained[j, c]:
                continue
            coeff = post[docs, c] / n
            s = totals[docs, c]
            target = empirical[j, c]

            def gap(delta):
                return float(np.sum(coeff * np.exp(delta * s))) - target

            deltas[j, c] = _bisect(gap)
    return deltas


def _bisect(gap) -> float:
    at_zero = gap(0.0)
    if at_zero == 0.0:
        return 0.0
    if at_zero > 0:
        hi, lo = 0.0, -1.0
        while gap(lo) > 0:
            lo *= 2
            if lo < -1e6:  # pragma: no cover - safety valve
                return lo
    else:
        lo, hi = 0.0, 1.0
        while gap(hi) < 0:
            hi *= 2
            if hi > 1e6:  # pragma: no cover - safety valve
                return hi
    for _ in range(_BISECT_STEPS):
        mid = (lo + hi) / 2
        if hi - lo < _BISECT_BRACKET:
            break
        if gap(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def uniform_model(classes: list[str], dimension: int = 0) -> MaxentModel:
    """The no-constraints model: the same posterior for every input."""
    return MaxentModel(
        classes=sorted(classes),
        dimension=dimension,
        weights=np.zeros((dimension, len(classes))),
    )
