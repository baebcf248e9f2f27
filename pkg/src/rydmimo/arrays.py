"""Planar array geometry and element radiation patterns.

Positions are expressed in wavelengths throughout, so the free-space
wavenumber is fixed at ``2*pi`` per wavelength.
"""

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "WAVENUMBER",
    "PlanarArray",
    "ElementPattern",
    "uniform_planar_array",
    "pattern_value",
]

# Free-space wavenumber in rad per wavelength.
WAVENUMBER = 2.0 * np.pi

PATTERN_KINDS = ("isotropic", "dipole")


@dataclass(frozen=True)
class PlanarArray:
    """Square grid of antenna elements on an L x L aperture.

    ``positions`` has shape (side_count**2, 3); all elements share the
    same z coordinate.  The pitch is aperture / side_count, so the full
    grid of element cells tiles the aperture exactly and each element
    owns an area of pitch**2.
    """

    side_count: int
    aperture: float
    plane_z: float
    positions: np.ndarray = field(repr=False)

    @property
    def pitch(self):
        """Element spacing in wavelengths (aperture / side_count)."""
        return self.aperture / self.side_count

    @property
    def element_area(self):
        """Area owned by one element, in squared wavelengths."""
        return self.pitch**2

    @property
    def n_elements(self):
        return self.side_count**2


def uniform_planar_array(aperture, side_count, plane_z=0.0):
    """Build a centered uniform side_count x side_count planar array.

    Grid coordinates run over {-(N-1)/2, ..., +(N-1)/2} * (L/N) on both
    in-plane axes, keeping the array centered on (0, 0, plane_z).

    Parameters
    ----------
    aperture : float
        Side length L of the aperture in wavelengths; must be > 0.
    side_count : int
        Elements per side N; must be >= 1.
    plane_z : float
        z coordinate of the array plane in wavelengths.
    """
    side_count = int(side_count)
    if side_count < 1:
        raise ValueError(f"side_count must be >= 1, got {side_count}")
    aperture = float(aperture)
    if not np.isfinite(aperture) or aperture <= 0:
        raise ValueError(f"aperture must be positive, got {aperture}")

    pitch = aperture / side_count
    coords = (np.arange(side_count) - (side_count - 1) / 2.0) * pitch
    xg, yg = np.meshgrid(coords, coords, indexing="ij")
    positions = np.column_stack(
        [xg.ravel(), yg.ravel(), np.full(side_count**2, float(plane_z))]
    )
    positions.setflags(write=False)
    return PlanarArray(side_count, aperture, float(plane_z), positions)


@dataclass(frozen=True)
class ElementPattern:
    """Far-field pattern of one array element.

    kind is 'isotropic' (unit amplitude) or 'dipole' (cos(theta)
    amplitude, maximum along the array normal).  Both share the
    steering phase exp(+j k . r') for an element at r'.
    """

    kind: str
    position: np.ndarray

    def __post_init__(self):
        if self.kind not in PATTERN_KINDS:
            raise ValueError(
                f"unknown pattern kind {self.kind!r}; expected one of {PATTERN_KINDS}"
            )
        pos = np.asarray(self.position, dtype=float)
        if pos.shape != (3,):
            raise ValueError(f"position must be a 3-vector, got shape {pos.shape}")
        pos = pos.copy()
        pos.setflags(write=False)
        object.__setattr__(self, "position", pos)


def pattern_value(pattern, theta, phi):
    """Complex pattern value(s) toward direction(s) (theta, phi).

    The wave vector is k = 2*pi * (sin t cos p, sin t sin p, cos t) and
    the returned value is amp(theta) * exp(j k . r'), with amp = 1 for
    isotropic elements and amp = cos(theta) for dipole elements.
    ``theta`` and ``phi`` broadcast together.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    sin_t = np.sin(theta)
    cos_t = np.cos(theta)
    x, y, z = pattern.position
    k_dot_r = WAVENUMBER * (
        sin_t * np.cos(phi) * x + sin_t * np.sin(phi) * y + cos_t * z
    )
    steering = np.exp(1j * k_dot_r)
    if pattern.kind == "dipole":
        return cos_t * steering
    return steering
