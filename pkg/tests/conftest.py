import numpy as np
import pytest

from noma_secrecy import RiMatrix, SystemParams, draw_realizations


def _instances(n, seed, rho_db_choices=(50.0, 60.0, 70.0),
               beta_lo=0.05, beta_hi=0.95):
    """Randomized (g1, g2, rho_t, ri) instances for property tests.

    Gains come from the default channel model, residual fractions are
    uniform in [beta_lo, beta_hi], and the transmit SNR cycles through
    the given dB choices.  Deterministic in (n, seed).
    """
    rng = np.random.default_rng(seed)
    draws = draw_realizations(SystemParams(), seed, n)
    for i in range(n):
        b11, b12, b21, b22 = beta_lo + (beta_hi - beta_lo) * rng.random(4)
        rho_db = rho_db_choices[i % len(rho_db_choices)]
        ri = RiMatrix(b11=b11, b12=b12, b21=b21, b22=b22)
        yield float(draws.g1[i]), float(draws.g2[i]), 10.0 ** (rho_db / 10.0), ri


@pytest.fixture
def instance_stream():
    return _instances
