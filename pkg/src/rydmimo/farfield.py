"""Stochastic far-field channels for isotropic scattering.

Builds receive-side spatial correlation matrices by integrating element
pattern products over the full sphere, applies dense-array efficiency
limits, and draws correlated Rayleigh channel realizations
``H = sqrt(e) * H_w * R**(1/2)`` with an i.i.d. complex Gaussian core.
The transmit side is ideal (uncorrelated, unit efficiency).
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from .arrays import WAVENUMBER, ElementPattern
from .errors import DegeneratePatternError, NumericalError

__all__ = [
    "DEFAULT_POLAR_NODES",
    "DEFAULT_AZIMUTH_NODES",
    "CorrelationMatrix",
    "ChannelEnsembleSpec",
    "correlation",
    "correlation_matrix",
    "dual_polarization_correlation",
    "hannan_efficiency",
    "correlation_sqrt",
    "sample_channel",
]

DEFAULT_POLAR_NODES = 64
DEFAULT_AZIMUTH_NODES = 128

# Most negative correlation eigenvalue tolerated before sampling is
# refused; separates quadrature rounding from genuine modeling errors.
PSD_CLAMP = -1e-6

_SELF_POWER_FLOOR = 1e-30


def _sphere_grid(polar_nodes, azimuth_nodes):
    """Quadrature nodes and weights for full-sphere pattern integrals.

    Gauss-Legendre in cos(theta) times a uniform periodic rule in phi;
    both are spectrally accurate for the smooth integrands produced by
    planar-array patterns.  Returns (cos_theta, phi, weights) arrays of
    shape (polar_nodes, azimuth_nodes).
    """
    polar_nodes = int(polar_nodes)
    azimuth_nodes = int(azimuth_nodes)
    if polar_nodes < 1 or azimuth_nodes < 1:
        raise ValueError("quadrature node counts must be >= 1")
    u, wu = leggauss(polar_nodes)
    phi = np.linspace(0.0, 2.0 * np.pi, azimuth_nodes, endpoint=False)
    cos_t = np.broadcast_to(u[:, None], (polar_nodes, azimuth_nodes))
    phi_g = np.broadcast_to(phi[None, :], (polar_nodes, azimuth_nodes))
    weights = np.broadcast_to(
        wu[:, None] * (2.0 * np.pi / azimuth_nodes), (polar_nodes, azimuth_nodes)
    )
    return cos_t, phi_g, weights


def _pattern_samples(kind, position, cos_t, phi):
    """Pattern values on the quadrature grid, flattened."""
    sin_t = np.sqrt(np.clip(1.0 - cos_t**2, 0.0, None))
    x, y, z = position
    k_dot_r = WAVENUMBER * (
        sin_t * np.cos(phi) * x + sin_t * np.sin(phi) * y + cos_t * z
    )
    samples = np.exp(1j * k_dot_r)
    if kind == "dipole":
        samples = cos_t * samples
    return samples.ravel()


def correlation(
    pattern_m,
    pattern_n,
    polar_nodes=DEFAULT_POLAR_NODES,
    azimuth_nodes=DEFAULT_AZIMUTH_NODES,
):
    """Complex correlation coefficient between two element patterns.

    Integrates E_m * conj(E_n) over the full sphere (isotropic
    scattering) and normalizes by the geometric mean of the two
    self-powers, all under the same quadrature.  Identical patterns
    yield exactly 1; |result| <= 1 up to quadrature rounding.

    For isotropic elements spaced d apart this reduces to the closed
    form sin(k d) / (k d), which zeroes out at half-wavelength spacing.

    Raises DegeneratePatternError if either self-power vanishes.
    """
    cos_t, phi, w = _sphere_grid(polar_nodes, azimuth_nodes)
    if pattern_m.kind == pattern_n.kind and np.array_equal(
        pattern_m.position, pattern_n.position
    ):
        return complex(1.0)
    wf = w.ravel()
    e_m = _pattern_samples(pattern_m.kind, pattern_m.position, cos_t, phi)
    e_n = _pattern_samples(pattern_n.kind, pattern_n.position, cos_t, phi)
    power_m = np.sum(wf * (e_m * e_m.conj()).real)
    power_n = np.sum(wf * (e_n * e_n.conj()).real)
    if power_m <= _SELF_POWER_FLOOR or power_n <= _SELF_POWER_FLOOR:
        raise DegeneratePatternError("element pattern has zero self-power")
    numerator = np.sum(wf * e_m * e_n.conj())
    return complex(numerator / np.sqrt(power_m * power_n))


@dataclass(frozen=True)
class CorrelationMatrix:
    """Hermitian receive correlation with its quadrature metadata."""

    matrix: np.ndarray
    polar_nodes: int
    azimuth_nodes: int

    @property
    def n_ports(self):
        return self.matrix.shape[0]


def correlation_matrix(
    array,
    kind,
    polar_nodes=DEFAULT_POLAR_NODES,
    azimuth_nodes=DEFAULT_AZIMUTH_NODES,
):
    """Pairwise correlation matrix for all elements of a planar array.

    Entry (m, n) is ``correlation`` between elements m and n with the
    given pattern kind.  The result is Hermitian by construction (upper
    triangle mirrored) with an exactly unit diagonal, and is positive
    semidefinite up to quadrature rounding because it is a weighted
    Gram matrix of the pattern samples.
    """
    cos_t, phi, w = _sphere_grid(polar_nodes, azimuth_nodes)
    wf = w.ravel()
    samples = np.stack(
        [_pattern_samples(kind, pos, cos_t, phi) for pos in array.positions]
    )
    gram = (samples * wf) @ samples.conj().T
    powers = np.diagonal(gram).real.copy()
    if np.any(powers <= _SELF_POWER_FLOOR):
        raise DegeneratePatternError("element pattern has zero self-power")
    r = gram / np.sqrt(np.outer(powers, powers))
    upper = np.triu(r, k=1)
    r = upper + upper.conj().T
    np.fill_diagonal(r, 1.0)
    return CorrelationMatrix(r, int(polar_nodes), int(azimuth_nodes))


def dual_polarization_correlation(r):
    """Port correlation for two orthogonal polarizations per element.

    Co-located orthogonal ports are uncorrelated in an isotropic
    environment, so the two polarization blocks reuse the same spatial
    correlation with zero cross blocks: blockdiag(R, R).
    """
    r = np.asarray(r)
    n = r.shape[0]
    out = np.zeros((2 * n, 2 * n), dtype=r.dtype)
    out[:n, :n] = r
    out[n:, n:] = r
    return out


def hannan_efficiency(area, kind):
    """Dense-array element efficiency limit, capped at 1.

    ``area`` is the per-element area S in squared wavelengths.  The
    limit is pi * S for classical dipole elements and 4 * pi * S for
    atomic elements, whose unit directivity relaxes the bound by the
    typical dipole directivity factor of about 4.
    """
    area = float(area)
    if not np.isfinite(area) or area <= 0:
        raise ValueError(f"element area must be positive, got {area}")
    if kind == "dipole":
        e = np.pi * area
    elif kind == "atomic":
        e = 4.0 * np.pi * area
    else:
        raise ValueError(f"unknown efficiency kind {kind!r}")
    return min(1.0, e)


@dataclass(frozen=True)
class ChannelEnsembleSpec:
    """Everything needed to draw reproducible channel realizations.

    ``correlation`` may be a CorrelationMatrix or a plain ndarray.
    ``seed`` and a trial index fully determine each realization, so
    trials can be evaluated in any order or in parallel.
    """

    correlation: object
    efficiency: float
    n_tx: int
    seed: int
    trials: int

    def __post_init__(self):
        if self.n_tx < 1:
            raise ValueError(f"n_tx must be >= 1, got {self.n_tx}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not 0.0 < self.efficiency <= 1.0:
            raise ValueError(f"efficiency must lie in (0, 1], got {self.efficiency}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")

    @property
    def correlation_array(self):
        m = getattr(self.correlation, "matrix", self.correlation)
        return np.asarray(m)


def correlation_sqrt(r):
    """Hermitian PSD square root of a correlation matrix.

    Accepts a CorrelationMatrix or a plain ndarray.  Negative
    eigenvalues within the clamp tolerance are treated as quadrature
    rounding and clipped to zero; anything below the tolerance raises
    NumericalError.
    """
    r = np.asarray(getattr(r, "matrix", r))
    eigvals, eigvecs = np.linalg.eigh(r)
    if eigvals.min() < PSD_CLAMP:
        raise NumericalError(
            f"correlation matrix is not PSD: min eigenvalue {eigvals.min():.3e}"
        )
    eigvals = np.clip(eigvals, 0.0, None)
    return (eigvecs * np.sqrt(eigvals)) @ eigvecs.conj().T


def _white_channel(n_tx, n_rx, seed, trial_index):
    """i.i.d. CN(0, 1) draw from the (seed, trial) substream."""
    rng = np.random.default_rng((int(seed), int(trial_index)))
    return (
        rng.standard_normal((n_tx, n_rx)) + 1j * rng.standard_normal((n_tx, n_rx))
    ) / np.sqrt(2.0)


def _sample_with_root(root, efficiency, n_tx, seed, trial_index):
    h_w = _white_channel(n_tx, root.shape[0], seed, trial_index)
    return np.sqrt(efficiency) * (h_w @ root)


def sample_channel(spec, trial_index):
    """One correlated Rayleigh realization H = sqrt(e) * H_w * R**(1/2).

    Rows index transmit ports, columns receive ports, so the row
    covariance converges to efficiency * R while the transmit side
    stays white.  Identical (seed, trial_index) pairs return
    bit-identical matrices.
    """
    if trial_index < 0:
        raise ValueError(f"trial_index must be >= 0, got {trial_index}")
    root = correlation_sqrt(spec.correlation_array)
    return _sample_with_root(
        root, spec.efficiency, spec.n_tx, spec.seed, trial_index
    )
