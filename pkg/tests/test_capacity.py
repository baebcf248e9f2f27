"""Tests for log-det and ergodic capacity plus normalization policy."""

import numpy as np
import pytest
from scipy.integrate import quad

from rydmimo.capacity import (
    db_to_linear,
    det_capacity,
    ergodic_capacity,
    normalize,
)
from rydmimo.errors import DegenerateChannelError
from rydmimo.farfield import ChannelEnsembleSpec


def _random_complex(shape, seed):
    rng = np.random.default_rng(seed)
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _random_unitary(n, seed):
    q, r = np.linalg.qr(_random_complex((n, n), seed))
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def test_siso_closed_form():
    assert det_capacity(np.array([[1.0 + 0j]]), 10.0, 1) == pytest.approx(
        np.log2(11.0), rel=1e-12
    )


def test_identity_channel_closed_form():
    for n in (2, 5, 8):
        gamma = 7.3
        expected = n * np.log2(1 + gamma / n)
        assert det_capacity(np.eye(n, dtype=complex), gamma, n) == pytest.approx(
            expected, rel=1e-12
        )


def test_matches_singular_value_oracle():
    gamma, n_tx = 10.0, 4
    for seed in range(5):
        h = _random_complex((4, 4), seed)
        oracle = np.sum(np.log2(1 + (gamma / n_tx) * np.linalg.svd(h, compute_uv=False) ** 2))
        assert det_capacity(h, gamma, n_tx) == pytest.approx(oracle, abs=1e-9)


def test_rectangular_orientations_agree():
    h = _random_complex((3, 7), seed=2)
    c_wide = det_capacity(h, 5.0, 3)
    c_tall = det_capacity(h.conj().T, 5.0, 3)
    assert c_wide == pytest.approx(c_tall, rel=1e-12)


def test_unitary_invariance():
    h = _random_complex((5, 5), seed=9)
    u = _random_unitary(5, seed=10)
    v = _random_unitary(5, seed=11)
    base = det_capacity(h, 8.0, 5)
    assert det_capacity(u @ h @ v, 8.0, 5) == pytest.approx(base, abs=1e-9)


def test_det_capacity_input_validation():
    with pytest.raises(ValueError):
        det_capacity(np.array([[np.inf + 0j]]), 10.0, 1)
    with pytest.raises(ValueError):
        det_capacity(np.eye(2, dtype=complex), -1.0, 2)
    with pytest.raises(ValueError):
        det_capacity(np.eye(2, dtype=complex), 10.0, 0)
    with pytest.raises(ValueError):
        det_capacity(np.ones(3, dtype=complex), 10.0, 1)


def test_capacity_nonnegative_for_tiny_channels():
    h = 1e-8 * _random_complex((3, 3), seed=1)
    assert det_capacity(h, 1e-6, 3) >= 0.0


def _siso_spec(trials, seed=1234, efficiency=1.0):
    return ChannelEnsembleSpec(
        correlation=np.eye(1, dtype=complex),
        efficiency=efficiency,
        n_tx=1,
        seed=seed,
        trials=trials,
    )


def siso_ergodic_oracle(gamma):
    """E[log2(1 + gamma X)] for unit-exponential X by 1-D quadrature."""
    value, _ = quad(lambda x: np.log2(1 + gamma * x) * np.exp(-x), 0, np.inf)
    return value


def test_siso_ergodic_matches_quadrature_oracle():
    gamma = db_to_linear(10.0)
    est = ergodic_capacity(_siso_spec(trials=20_000), gamma)
    oracle = siso_ergodic_oracle(gamma)
    assert est.mean == pytest.approx(oracle, rel=0.01)
    assert est.stderr < 0.02


def test_ergodic_capacity_monotone_in_snr_and_vanishing():
    spec = _siso_spec(trials=4000)
    gammas = (1e-3, 1e-2, 1e-1, 1.0, 10.0)
    means = [ergodic_capacity(spec, g).mean for g in gammas]
    assert all(a < b for a, b in zip(means, means[1:]))
    assert means[0] < 2e-3


def test_ergodic_capacity_monotone_in_efficiency():
    r = np.eye(3, dtype=complex)
    means = []
    for e in (0.25, 0.5, 1.0):
        spec = ChannelEnsembleSpec(r, efficiency=e, n_tx=3, seed=4, trials=2000)
        means.append(ergodic_capacity(spec, 10.0).mean)
    assert means[0] < means[1] < means[2]


def test_fully_correlated_ensemble_matches_rank_one_oracle():
    # All-ones R collapses the receiver to a single spatial mode; each
    # realization reduces to log2(1 + (gamma n / n_tx) * ||H_w v||^2).
    n = 4
    gamma = 10.0
    r = np.ones((n, n), dtype=complex)
    trials = 4000
    spec = ChannelEnsembleSpec(r, efficiency=1.0, n_tx=n, seed=21, trials=trials)
    est = ergodic_capacity(spec, gamma)

    from rydmimo.farfield import sample_channel

    v = np.full(n, 1 / np.sqrt(n))
    caps = np.empty(trials)
    for t in range(trials):
        h = sample_channel(spec, t)
        # recover H_w v from H = H_w sqrt(n) v v^H: H v = sqrt(n) (H_w v)
        hv = h @ v / np.sqrt(n)
        caps[t] = np.log2(1 + (gamma / n) * n * np.sum(np.abs(hv) ** 2))
    assert est.mean == pytest.approx(np.mean(caps), rel=1e-12)


def test_ergodic_capacity_reproducible():
    spec = ChannelEnsembleSpec(
        correlation=np.eye(3, dtype=complex),
        efficiency=0.8,
        n_tx=3,
        seed=90,
        trials=500,
    )
    first = ergodic_capacity(spec, 10.0)
    second = ergodic_capacity(spec, 10.0)
    assert first == second
    # batching must not change values beyond accumulated rounding
    small_batches = ergodic_capacity(spec, 10.0, batch_size=7)
    assert small_batches.mean == pytest.approx(first.mean, abs=1e-12)


def test_normalize_self_mode():
    h = np.full((2, 2), 1.0 + 0.0j)
    assert np.array_equal(normalize(h, mode="self"), h)
    scaled = normalize(3.0 * h, mode="self")
    assert np.allclose(scaled, h, atol=1e-15)
    assert np.mean(np.abs(scaled) ** 2) == pytest.approx(1.0, rel=1e-12)


def test_normalize_reference_mode_preserves_ratio():
    rng = np.random.default_rng(6)
    h_a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    h_b = 2.7 * (rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
    ratio = np.linalg.norm(h_b) / np.linalg.norm(h_a)
    na = normalize(h_a, mode="reference", reference=h_a)
    nb = normalize(h_b, mode="reference", reference=h_a)
    assert np.linalg.norm(nb) / np.linalg.norm(na) == pytest.approx(ratio, rel=1e-12)
    assert np.mean(np.abs(na) ** 2) == pytest.approx(1.0, rel=1e-12)


def test_normalize_errors():
    with pytest.raises(DegenerateChannelError):
        normalize(np.zeros((2, 2), dtype=complex), mode="self")
    with pytest.raises(ValueError):
        normalize(np.eye(2, dtype=complex), mode="reference")
    with pytest.raises(ValueError):
        normalize(np.eye(2, dtype=complex), mode="median")
