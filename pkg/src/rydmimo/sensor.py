"""Two-level atomic field sensor with fine-structure sublevels.

Models the RF coupling between a pair of Rydberg levels, each split into
two magnetic sublevels (basis order ``|S,-1/2>``, ``|S,+1/2>``,
``|P,-1/2>``, ``|P,+1/2>``).  The z axis is the quantization axis; an
incident field tilted by (theta, phi) drives pi transitions through its
z component and sigma+/- transitions through its transverse component.

The Autler-Townes splitting extracted from the level structure equals
|Omega| for every field orientation, which is what makes the sensor an
isotropic, polarization-blind amplitude detector.
"""

import numpy as np

# Reduced Planck constant, J*s (CODATA 2018).
HBAR = 1.054571817e-34

__all__ = [
    "HBAR",
    "build_rotated_hamiltonian",
    "eigenvalues",
    "at_splitting",
    "field_from_splitting",
    "rabi_from_field",
]

# Relative tolerance for accepting a matrix as Hermitian.
_HERMITIAN_RTOL = 1e-12


def build_rotated_hamiltonian(omega, theta, phi):
    """Interaction Hamiltonian for a field tilted by (theta, phi).

    Parameters
    ----------
    omega : complex
        Rabi frequency in rad/s.  May be complex; only the magnitude is
        physically observable.
    theta : float
        Polar angle between the quantization axis and the field, in
        [0, pi].
    phi : float
        Azimuth of the field's transverse component, in [0, 2*pi).

    Returns
    -------
    ndarray
        4x4 complex Hermitian matrix in units of hbar * rad/s.  The two
        2x2 diagonal blocks are exactly zero (couplings only connect the
        lower and upper level pair).

    At theta = 0 only the pi couplings survive: H[0, 2] = -omega/2 and
    H[1, 3] = +omega/2, with all sigma entries exactly zero.
    """
    omega = complex(omega)
    if not (np.isfinite(omega.real) and np.isfinite(omega.imag)):
        raise ValueError("omega must be finite")
    theta = float(theta)
    phi = float(phi)
    if not np.isfinite(theta) or not (0.0 <= theta <= np.pi):
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    if not np.isfinite(phi) or not (0.0 <= phi < 2.0 * np.pi):
        raise ValueError(f"phi must lie in [0, 2*pi), got {phi}")

    cos_t = np.cos(theta)
    sin_t = np.sin(theta)
    phase = np.exp(1j * phi)

    # Coupling block from the S sublevels to the P sublevels; the full
    # matrix is assembled as its Hermitian mirror so Hermiticity holds
    # exactly by construction.
    coupling = 0.5 * np.array(
        [
            [-omega * cos_t, omega * sin_t * np.conj(phase)],
            [omega * sin_t * phase, omega * cos_t],
        ],
        dtype=complex,
    )
    h = np.zeros((4, 4), dtype=complex)
    h[:2, 2:] = coupling
    h[2:, :2] = coupling.conj().T
    return h


def eigenvalues(h):
    """Real eigenvalues of a Hermitian sensor Hamiltonian, ascending.

    Raises ValueError if ``h`` deviates from Hermitian by more than
    1e-12 relative.  For any coupling orientation the spectrum is the
    twofold-degenerate pair {-|Omega|/2, +|Omega|/2}.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    scale = np.linalg.norm(h)
    defect = np.linalg.norm(h - h.conj().T)
    if defect > _HERMITIAN_RTOL * max(scale, 1.0):
        raise ValueError("matrix is not Hermitian within tolerance")
    return np.linalg.eigvalsh(h)


def at_splitting(h):
    """Autler-Townes splitting in rad/s: spread of the level spectrum.

    Equals |Omega| independently of the field orientation.
    """
    ev = eigenvalues(h)
    return float(ev[-1] - ev[0])


def field_from_splitting(delta_at, mu):
    """Electric field amplitude in V/m recovered from an AT splitting.

    Parameters
    ----------
    delta_at : float
        Measured splitting in rad/s; must be >= 0.
    mu : float
        Transition dipole moment in C*m; must be nonzero.
    """
    if mu == 0:
        raise ValueError("transition dipole moment must be nonzero")
    delta_at = float(delta_at)
    if not np.isfinite(delta_at) or delta_at < 0:
        raise ValueError(f"splitting must be finite and >= 0, got {delta_at}")
    return HBAR * delta_at / abs(mu)


def rabi_from_field(field, mu):
    """Rabi frequency magnitude |mu * E / hbar| in rad/s."""
    return abs(mu * field / HBAR)
