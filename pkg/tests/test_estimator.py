import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from noma_secrecy import (
    MaxMinSecrecyAllocator,
    RiMatrix,
    SystemParams,
    draw_realizations,
    optimize_batch,
)


def _gain_matrix(seed=13, n=50, rho_t_db=60.0):
    draws = draw_realizations(SystemParams(rho_t_db=rho_t_db), seed, n)
    return np.column_stack([draws.g1, draws.g2])


def test_sklearn_param_plumbing():
    est = MaxMinSecrecyAllocator(rho_t_db=70.0, b12=0.3)
    params = est.get_params()
    assert params["rho_t_db"] == 70.0 and params["b12"] == 0.3
    est.set_params(b21=0.4)
    assert est.b21 == 0.4
    copy = clone(est)
    assert copy.get_params() == est.get_params()
    assert not hasattr(copy, "ri_")


def test_fit_sets_state():
    X = _gain_matrix()
    est = MaxMinSecrecyAllocator(rho_t_db=70.0, b11=0.5)
    assert est.fit(X) is est
    assert est.ri_ == RiMatrix(0.5, 0.2, 0.2, 0.2)
    assert est.rho_t_ == pytest.approx(1e7)
    assert est.n_features_in_ == 2


def test_predict_matches_batch_solver():
    X = _gain_matrix(seed=21)
    est = MaxMinSecrecyAllocator(rho_t_db=65.0, b11=0.5, b21=0.5).fit(X)
    batch = optimize_batch(X[:, 0], X[:, 1], est.rho_t_, est.ri_)
    alpha = est.predict(X)
    assert np.array_equal(alpha, batch.alpha_hat, equal_nan=True)
    out = est.transform(X)
    assert out.shape == (X.shape[0], 2)
    assert np.array_equal(out[:, 0], batch.alpha_hat, equal_nan=True)
    assert np.array_equal(out[:, 1], batch.value)
    assert est.score(X) == pytest.approx(batch.value.mean(), rel=1e-15)


def test_fit_transform_shortcut():
    X = _gain_matrix(seed=2, n=20)
    est = MaxMinSecrecyAllocator()
    out = est.fit_transform(X)
    assert np.array_equal(out, est.transform(X), equal_nan=True)


def test_predict_before_fit_raises():
    est = MaxMinSecrecyAllocator()
    with pytest.raises(NotFittedError):
        est.predict(_gain_matrix(n=3))


def test_input_validation():
    est = MaxMinSecrecyAllocator()
    with pytest.raises(ValueError):
        est.fit(np.ones((4, 3)))
    with pytest.raises(ValueError):
        est.fit(np.array([[1e-5, 2e-5]]))  # g1 < g2
    with pytest.raises(ValueError):
        est.fit(np.array([[2e-5, 0.0]]))
    with pytest.raises(ValueError):
        MaxMinSecrecyAllocator(b12=1.5).fit(_gain_matrix(n=3))


def test_infeasible_rows_surface_as_nan():
    X = np.array([[1.01e-6, 1.0e-6]])
    est = MaxMinSecrecyAllocator(rho_t_db=10.0).fit(X)
    assert np.isnan(est.predict(X)[0])
    assert est.transform(X)[0, 1] == 0.0
    assert est.score(X) == 0.0
