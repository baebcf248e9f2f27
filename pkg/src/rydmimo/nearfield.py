"""Deterministic near-field channels between facing planar arrays.

The free-space dyadic Green's function maps a source current's
polarization components to the vector field at a receiver.  Classical
channels sample individual dyad entries per polarization pair; the
atomic receiver instead reports the amplitude of the total vector field
with a scalar propagation phase, because it cannot distinguish
polarizations.
"""

from dataclasses import dataclass

import numpy as np

from .arrays import WAVENUMBER, PlanarArray, uniform_planar_array
from .errors import SingularityError

__all__ = [
    "NearFieldScenario",
    "scalar_green",
    "dyadic_green",
    "facing_scenario",
    "classical_channel",
    "rydberg_channel",
]

_POL_INDEX = {"x": 0, "y": 1, "z": 2}


def scalar_green(r, r_prime, k=WAVENUMBER):
    """Free-space scalar kernel exp(-j k R) / (4 pi R), R = |r - r'|.

    Positions are in wavelengths when used with the default wavenumber.
    Raises SingularityError for coincident points.
    """
    r = np.asarray(r, dtype=float)
    r_prime = np.asarray(r_prime, dtype=float)
    dist = np.linalg.norm(r - r_prime)
    if dist == 0.0:
        raise SingularityError("scalar Green's function is singular at r == r'")
    return np.exp(-1j * k * dist) / (4.0 * np.pi * dist)


def _dyad_coefficients(kr):
    """Radial coefficients of the dyad: G = g * (A*I + B*rhat rhat^T)."""
    a = 1.0 - 1j / kr - 1.0 / kr**2
    b = -1.0 + 3j / kr + 3.0 / kr**2
    return a, b


def dyadic_green(r, r_prime, k=WAVENUMBER):
    """Free-space dyadic Green's function (I + grad grad / k^2) g.

    Returns the 3x3 complex matrix G with entries G_pq for p, q in
    {x, y, z}.  In closed form, with R = |r - r'| and rhat the unit
    separation vector,

        G = g(R) * [ (1 - j/(kR) - 1/(kR)^2) I
                     + (-1 + 3j/(kR) + 3/(kR)^2) rhat rhat^T ].

    The matrix is exactly symmetric and invariant under swapping the
    two arguments (reciprocity).  In the far zone it tends to the
    transverse projector g * (I - rhat rhat^T).
    """
    r = np.asarray(r, dtype=float)
    r_prime = np.asarray(r_prime, dtype=float)
    sep = r - r_prime
    dist = np.linalg.norm(sep)
    if dist == 0.0:
        raise SingularityError("dyadic Green's function is singular at r == r'")
    rhat = sep / dist
    g = np.exp(-1j * k * dist) / (4.0 * np.pi * dist)
    a, b = _dyad_coefficients(k * dist)
    return g * (a * np.eye(3) + b * np.outer(rhat, rhat))


@dataclass(frozen=True)
class NearFieldScenario:
    """Two parallel coaxial planar arrays facing each other.

    The separation is the gap between the array planes along z; the
    transmit array must sit below the receive array.  Polarization
    tuples select which dyad rows/columns enter the classical channel.
    """

    tx: PlanarArray
    rx: PlanarArray
    tx_pols: tuple = ("x",)
    rx_pols: tuple = ("x",)

    def __post_init__(self):
        for name, pols in (("tx_pols", self.tx_pols), ("rx_pols", self.rx_pols)):
            pols = tuple(pols)
            if not pols:
                raise ValueError(f"{name} must be non-empty")
            if len(set(pols)) != len(pols):
                raise ValueError(f"{name} contains duplicates: {pols}")
            bad = [p for p in pols if p not in _POL_INDEX]
            if bad:
                raise ValueError(f"{name} contains unknown polarizations: {bad}")
            object.__setattr__(self, name, pols)
        if self.rx.plane_z <= self.tx.plane_z:
            raise ValueError("receive array must sit at larger z than transmit array")

    @property
    def separation(self):
        return self.rx.plane_z - self.tx.plane_z


def facing_scenario(aperture, side_count, distance, tx_pols=("x",), rx_pols=("x",)):
    """Convenience constructor: two identical arrays a distance apart."""
    if distance <= 0:
        raise ValueError(f"distance must be positive, got {distance}")
    tx = uniform_planar_array(aperture, side_count, plane_z=0.0)
    rx = uniform_planar_array(aperture, side_count, plane_z=float(distance))
    return NearFieldScenario(tx, rx, tx_pols, rx_pols)


def _pairwise_dyad_parts(rx_pos, tx_pos, k):
    """Per-pair scalar kernel, dyad coefficients and unit separations.

    Shapes: g, a, b are (M, N); rhat is (M, N, 3) for M receive and N
    transmit positions.
    """
    sep = rx_pos[:, None, :] - tx_pos[None, :, :]
    dist = np.linalg.norm(sep, axis=2)
    if np.any(dist == 0.0):
        raise SingularityError("coincident transmit/receive elements")
    rhat = sep / dist[:, :, None]
    g = np.exp(-1j * k * dist) / (4.0 * np.pi * dist)
    a, b = _dyad_coefficients(k * dist)
    return g, a, b, rhat, dist


def classical_channel(scenario, k=WAVENUMBER):
    """Polarization block channel between two classical dipole arrays.

    The output stacks one block per (rx_pol, tx_pol) pair in the
    declared order; block (q, p) holds G_qp(r_m, r'_n) for every
    receive element m and transmit element n.  The full matrix has
    shape (N_rx * len(rx_pols), N_tx * len(tx_pols)).
    """
    rx_pos = scenario.rx.positions
    tx_pos = scenario.tx.positions
    g, a, b, rhat, _ = _pairwise_dyad_parts(rx_pos, tx_pos, k)
    m, n = g.shape
    n_rp = len(scenario.rx_pols)
    n_tp = len(scenario.tx_pols)
    h = np.empty((m * n_rp, n * n_tp), dtype=complex)
    for bi, q in enumerate(scenario.rx_pols):
        qi = _POL_INDEX[q]
        for bj, p in enumerate(scenario.tx_pols):
            pi = _POL_INDEX[p]
            block = g * (
                (a if qi == pi else 0.0) + b * rhat[:, :, qi] * rhat[:, :, pi]
            )
            h[bi * m : (bi + 1) * m, bj * n : (bj + 1) * n] = block
    return h


def rydberg_channel(scenario, tx_pol="x", k=WAVENUMBER):
    """Channel to an atomic array that senses total field amplitude.

    For a single transmit polarization i, each element is

        h(r, r') = exp(-j k |r - r'|)
                   * sqrt(|G_xi|^2 + |G_yi|^2 + |G_zi|^2),

    i.e. the Euclidean norm of dyad column i with a scalar propagation
    phase.  The amplitude dominates the matching single-polarization
    classical entry |G_ii| for every pair, and the two coincide in the
    far zone where cross-polarized dyad entries decay.

    Only one transmit polarization is supported; there is no meaningful
    combining rule for several simultaneously driven polarizations at a
    polarization-blind receiver.
    """
    if not isinstance(tx_pol, str) or tx_pol not in _POL_INDEX:
        raise ValueError(
            f"exactly one transmit polarization of {tuple(_POL_INDEX)} is "
            f"supported, got {tx_pol!r}"
        )
    pi = _POL_INDEX[tx_pol]
    g, a, b, rhat, dist = _pairwise_dyad_parts(
        scenario.rx.positions, scenario.tx.positions, k
    )
    amp_sq = np.zeros_like(dist)
    for qi in range(3):
        col = g * ((a if qi == pi else 0.0) + b * rhat[:, :, qi] * rhat[:, :, pi])
        amp_sq += np.abs(col) ** 2
    return np.exp(-1j * k * dist) * np.sqrt(amp_sq)
