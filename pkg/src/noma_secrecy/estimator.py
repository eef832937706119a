"""Scikit-learn style facade over the closed-form allocator.

Rows of X are channel realizations [g1, g2]; predict maps each row to its
optimal power split and transform appends the achieved max-min secrecy
value, so the allocator drops into sklearn pipelines and parameter-search
tooling (get_params/set_params/clone all work off the constructor args).
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .optimizer import optimize_batch
from .rates import RiMatrix


class MaxMinSecrecyAllocator(BaseEstimator):
    """Closed-form max-min secrecy-fairness power allocation.

    Parameters
    ----------
    rho_t_db : transmit SNR in dB.
    b11, b12, b21, b22 : residual-interference fractions in [0, 1].

    Attributes (after fit)
    ----------
    rho_t_ : transmit SNR on linear scale.
    ri_ : validated residual-interference matrix.
    n_features_in_ : always 2 (g1 and g2 columns).
    """

    def __init__(self, rho_t_db: float = 60.0, b11: float = 0.2,
                 b12: float = 0.2, b21: float = 0.2, b22: float = 0.2):
        self.rho_t_db = rho_t_db
        self.b11 = b11
        self.b12 = b12
        self.b21 = b21
        self.b22 = b22

    def _validate_gains(self, X) -> np.ndarray:
        X = check_array(X, dtype=float, ensure_2d=True)
        if X.shape[1] != 2:
            raise ValueError(
                f"X must have exactly 2 columns [g1, g2], got {X.shape[1]}")
        if not (np.all(X[:, 1] > 0) and np.all(X[:, 0] > X[:, 1])):
            raise ValueError("every row must satisfy g1 > g2 > 0")
        return X

    def fit(self, X, y=None):
        """Validate inputs and freeze the system parameters."""
        X = self._validate_gains(X)
        self.ri_ = RiMatrix(b11=self.b11, b12=self.b12,
                            b21=self.b21, b22=self.b22)
        self.rho_t_ = 10.0 ** (self.rho_t_db / 10.0)
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X) -> np.ndarray:
        """Optimal power split per row; NaN where no split is feasible."""
        check_is_fitted(self, "ri_")
        X = self._validate_gains(X)
        return optimize_batch(X[:, 0], X[:, 1], self.rho_t_, self.ri_).alpha_hat

    def transform(self, X) -> np.ndarray:
        """Columns [alpha_hat, achieved min secrecy rate] per row."""
        check_is_fitted(self, "ri_")
        X = self._validate_gains(X)
        result = optimize_batch(X[:, 0], X[:, 1], self.rho_t_, self.ri_)
        return np.column_stack([result.alpha_hat, result.value])

    def fit_transform(self, X, y=None) -> np.ndarray:
        return self.fit(X).transform(X)

    def score(self, X, y=None) -> float:
        """Mean achieved max-min secrecy rate (higher is better)."""
        check_is_fitted(self, "ri_")
        X = self._validate_gains(X)
        return float(
            optimize_batch(X[:, 0], X[:, 1], self.rho_t_, self.ri_).value.mean()
        )
