"""L2-regularized linear regression (the Gaussian-prior MAP estimate)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import InvalidArgumentError, SingularMatrixError
from .rng import SplitMix64


@dataclass(frozen=True)
class DataSet:
    X: np.ndarray
    Y: np.ndarray

    def __post_init__(self):
        X = np.atleast_2d(np.asarray(self.X, dtype=np.float64))
        Y = np.asarray(self.Y, dtype=np.float64)
        if Y.ndim == 1:
            Y = Y[:, None]
        if X.shape[0] != Y.shape[0]:
            raise InvalidArgumentError(f"X has {X.shape[0]} rows but Y has {Y.shape[0]}")
        if not (np.all(np.isfinite(X)) and np.all(np.isfinite(Y))):
            raise InvalidArgumentError("DataSet entries must be finite")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)

    @property
    def n_features(self) -> int:
        return self.X.shape[1]

    @property
    def n_outputs(self) -> int:
        return self.Y.shape[1]


@dataclass(frozen=True)
class RidgeModel:
    weights: np.ndarray  # (n_features, n_outputs)
    lam: float


@dataclass(frozen=True)
class SyntheticRegressionSpec:
    true_weights: np.ndarray
    noise_std: float
    n_examples: int
    seed: int


def fit_ridge(data: DataSet, lam: float) -> RidgeModel:
    """Solve ``(X^T X + lam I) w = X^T Y`` by Cholesky (LU fallback).

    No intercept column is added; append a ones column to ``X`` if wanted.
    """
    if lam < 0 or not np.isfinite(lam):
        raise InvalidArgumentError(f"lambda must be a finite value >= 0, got {lam}")
    X, Y = data.X, data.Y
    if X.shape[0] < 1:
        raise InvalidArgumentError("need at least one example")
    n = X.shape[1]
    if lam == 0:
        rank = int(np.linalg.matrix_rank(X))
        if rank < n:
            raise SingularMatrixError(rank, n)
    A = X.T @ X + lam * np.eye(n)
    B = X.T @ Y
    try:
        w = scipy.linalg.cho_solve(scipy.linalg.cho_factor(A), B)
    except np.linalg.LinAlgError:
        w = scipy.linalg.solve(A, B)
    return RidgeModel(w, float(lam))


def predict(model: RidgeModel, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (model.weights.shape[0],):
        raise InvalidArgumentError(
            f"expected a {model.weights.shape[0]}-vector, got shape {x.shape}"
        )
    return model.weights.T @ x


def synth_regression(spec: SyntheticRegressionSpec) -> DataSet:
    """X ~ U[-1, 1], Y = X W + N(0, noise_std^2), drawn from SplitMix64(seed)."""
    W = np.atleast_2d(np.asarray(spec.true_weights, dtype=np.float64))
    if spec.n_examples < 1 or spec.noise_std < 0:
        raise InvalidArgumentError("n_examples must be >= 1 and noise_std >= 0")
    rng = SplitMix64(spec.seed)
    n, (N, P) = spec.n_examples, W.shape
    X = rng.uniform(n * N, -1.0, 1.0).reshape(n, N)
    noise = rng.normal(n * P).reshape(n, P)
    return DataSet(X, X @ W + spec.noise_std * noise)
