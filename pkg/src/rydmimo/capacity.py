"""Log-det and ergodic MIMO capacity with equal power allocation."""

from typing import NamedTuple

import numpy as np

from .errors import DegenerateChannelError
from .farfield import _sample_with_root, correlation_sqrt

__all__ = [
    "CapacityEstimate",
    "db_to_linear",
    "det_capacity",
    "ergodic_capacity",
    "normalize",
]


class CapacityEstimate(NamedTuple):
    """Monte Carlo capacity estimate in bits/s/Hz."""

    mean: float
    stderr: float


def db_to_linear(value_db):
    return 10.0 ** (float(value_db) / 10.0)


def _gram(h):
    """Hermitian Gram matrix on the smaller side of h (stacked ok)."""
    m, n = h.shape[-2:]
    g = h @ h.conj().swapaxes(-2, -1) if m <= n else h.conj().swapaxes(-2, -1) @ h
    return 0.5 * (g + g.conj().swapaxes(-2, -1))


def _det_capacity_gram(gram, gamma, n_tx):
    """log2 det(I + (gamma / n_tx) * gram) via Cholesky of the shifted
    Gram matrix, which is Hermitian positive definite by construction.
    """
    n = gram.shape[-1]
    a = (gamma / n_tx) * gram + np.eye(n)
    chol = np.linalg.cholesky(a)
    diag = np.diagonal(chol, axis1=-2, axis2=-1).real
    return 2.0 * np.sum(np.log2(diag), axis=-1)


def det_capacity(h, gamma, n_tx):
    """Single-realization capacity log2 det(I + (gamma/n_tx) H H^H).

    Parameters
    ----------
    h : ndarray
        Complex channel matrix; either orientation is accepted since
        the nonzero spectrum of H H^H matches that of H^H H.
    gamma : float
        Total SNR, linear; must be > 0.
    n_tx : int
        Transmit port count dividing the power.

    Returns a value in bits/s/Hz, always >= 0.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2:
        raise ValueError(f"expected a 2-D channel matrix, got shape {h.shape}")
    if not np.all(np.isfinite(h)):
        raise ValueError("channel matrix contains non-finite entries")
    gamma = float(gamma)
    if not np.isfinite(gamma) or gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    if n_tx < 1:
        raise ValueError(f"n_tx must be >= 1, got {n_tx}")
    return float(_det_capacity_gram(_gram(h), gamma, int(n_tx)))


def ergodic_capacity(spec, gamma, batch_size=None):
    """Mean capacity over the realizations of a channel ensemble.

    Averages ``det_capacity`` over ``spec.trials`` draws of
    ``sample_channel(spec, t)`` for t = 0 .. trials-1 and reports the
    Monte Carlo standard error.  Realizations depend only on
    (spec.seed, t), so the result is reproducible for a fixed seed; the
    trial-ordered mean uses numpy's pairwise summation.

    ``batch_size`` only controls how many realizations are held in
    memory at once.
    """
    gamma = float(gamma)
    if not np.isfinite(gamma) or gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    r = spec.correlation_array
    root = correlation_sqrt(r)
    n_rx = r.shape[0]
    if batch_size is None:
        batch_size = max(1, 4_000_000 // max(1, spec.n_tx * n_rx))
    caps = np.empty(spec.trials)
    for start in range(0, spec.trials, batch_size):
        stop = min(start + batch_size, spec.trials)
        stack = np.stack(
            [
                _sample_with_root(root, spec.efficiency, spec.n_tx, spec.seed, t)
                for t in range(start, stop)
            ]
        )
        caps[start:stop] = _det_capacity_gram(_gram(stack), gamma, spec.n_tx)
    mean = float(np.mean(caps))
    if spec.trials > 1:
        stderr = float(np.std(caps, ddof=1) / np.sqrt(spec.trials))
    else:
        stderr = 0.0
    return CapacityEstimate(mean, stderr)


def normalize(h, mode="self", reference=None):
    """Rescale a channel matrix for capacity comparisons.

    mode='self' scales ``h`` to unit mean entry power.  For comparing
    systems whose amplitude difference is the point of the comparison,
    mode='reference' scales by the single constant that gives the
    *reference* matrix unit mean entry power, preserving relative gains
    between matrices normalized against the same reference.
    """
    h = np.asarray(h, dtype=complex)
    if mode == "self":
        target = h
    elif mode == "reference":
        if reference is None:
            raise ValueError("mode='reference' requires a reference matrix")
        target = np.asarray(reference, dtype=complex)
    else:
        raise ValueError(f"unknown normalization mode {mode!r}")
    mean_power = np.mean(np.abs(target) ** 2)
    if mean_power == 0.0:
        raise DegenerateChannelError("cannot normalize a zero-power channel")
    return h / np.sqrt(mean_power)
