"""Acceptance suite: every release criterion at its stated tolerance.

Each test prints one [PASS]/[FAIL] line (run with ``pytest -s`` to see
them).  Oracles are implemented locally so each check stays independent
of the library code path it validates.
"""

import time
from contextlib import contextmanager

import numpy as np
import pytest
from scipy.integrate import quad, simpson
from threadpoolctl import threadpool_limits

from rydmimo.arrays import ElementPattern, uniform_planar_array
from rydmimo.capacity import db_to_linear, det_capacity, ergodic_capacity
from rydmimo.experiments import SweepConfig, format_csv, run_farfield, run_nearfield
from rydmimo.farfield import ChannelEnsembleSpec, correlation, hannan_efficiency
from rydmimo.nearfield import dyadic_green, scalar_green
from rydmimo.sensor import (
    at_splitting,
    build_rotated_hamiltonian,
    eigenvalues,
    field_from_splitting,
    rabi_from_field,
)

K0 = 2 * np.pi


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    print(f"[PASS] {name}")


# --------------------------------------------------------------------------
# 1. orientation-invariant level splitting
# --------------------------------------------------------------------------

def test_orientation_invariance():
    with criterion("orientation invariance: eigenvalues +-Omega/2 on a 32x32 grid"):
        omega = 2 * np.pi * 1e6
        expected = np.array([-0.5, -0.5, 0.5, 0.5]) * omega
        start = time.monotonic()
        worst = 0.0
        for theta in np.linspace(0.0, np.pi, 32):
            for phi in np.linspace(0.0, 2 * np.pi, 32, endpoint=False):
                ev = eigenvalues(build_rotated_hamiltonian(omega, theta, phi))
                worst = max(worst, np.max(np.abs(ev - expected)))
        elapsed = time.monotonic() - start
        assert worst < 1e-10 * omega
        assert elapsed < 1.0, f"grid sweep took {elapsed:.2f}s"


# --------------------------------------------------------------------------
# 2. field retrieval round trip
# --------------------------------------------------------------------------

def test_field_round_trip():
    with criterion("field retrieval round trip: E -> splitting -> E to 1e-12"):
        rng = np.random.default_rng(314)
        mu = 2.1e-29
        fields = 10.0 ** rng.uniform(-6, 3, size=1000)
        for e_in in fields:
            e_out = field_from_splitting(rabi_from_field(e_in, mu), mu)
            assert abs(e_out - e_in) <= 1e-12 * e_in


# --------------------------------------------------------------------------
# 3. correlation closed forms
# --------------------------------------------------------------------------

def _dense_correlation_oracle(kind, delta, n_theta=512, n_phi=1024):
    """512x1024 dense-grid evaluation of the sphere correlation integral."""
    theta = np.linspace(0.0, np.pi, n_theta)
    phi = np.linspace(0.0, 2 * np.pi, n_phi, endpoint=False)
    sin_t, cos_t = np.sin(theta), np.cos(theta)
    phase = np.exp(
        1j
        * K0
        * (
            np.outer(sin_t, np.cos(phi)) * delta[0]
            + np.outer(sin_t, np.sin(phi)) * delta[1]
            + np.outer(cos_t, np.ones(n_phi)) * delta[2]
        )
    )
    amp_sq = (cos_t**2 if kind == "dipole" else np.ones(n_theta)) * sin_t
    w_phi = 2 * np.pi / n_phi
    num = simpson((phase.sum(axis=1) * w_phi) * amp_sq, x=theta)
    den = simpson(amp_sq * 2 * np.pi, x=theta)
    return num / den


def test_correlation_closed_forms():
    with criterion("pattern correlation: sinc closed form and dense oracle to 1e-6"):
        origin = np.zeros(3)
        for d in (0.1, 0.25, 0.5, 1.0):
            r = correlation(
                ElementPattern("isotropic", origin),
                ElementPattern("isotropic", np.array([d, 0.0, 0.0])),
            )
            assert abs(r - np.sinc(2 * d)) < 1e-6
        for d in (0.25, 0.5):
            r = correlation(
                ElementPattern("dipole", origin),
                ElementPattern("dipole", np.array([d, 0.0, 0.0])),
            )
            oracle = _dense_correlation_oracle("dipole", np.array([d, 0.0, 0.0]))
            assert abs(r - oracle) < 1e-6


# --------------------------------------------------------------------------
# 4. dense-array efficiency values
# --------------------------------------------------------------------------

def test_efficiency_values():
    with criterion("element efficiency: dipole pi/4 at half-wavelength, atomic capped"):
        assert hannan_efficiency(0.25, "dipole") == np.pi / 4
        assert hannan_efficiency(0.25, "atomic") == 1.0


# --------------------------------------------------------------------------
# 5. dyadic Green's function oracle
# --------------------------------------------------------------------------

def _fd_dyad(r, r_prime, k=K0, step=1 / 2000):
    eye = np.eye(3)
    g0 = scalar_green(r, r_prime, k)
    out = np.zeros((3, 3), dtype=complex)
    for p in range(3):
        for q in range(3):
            if p == q:
                second = (
                    scalar_green(r + step * eye[p], r_prime, k)
                    - 2 * g0
                    + scalar_green(r - step * eye[p], r_prime, k)
                ) / step**2
            else:
                second = (
                    scalar_green(r + step * (eye[p] + eye[q]), r_prime, k)
                    - scalar_green(r + step * (eye[p] - eye[q]), r_prime, k)
                    - scalar_green(r - step * (eye[p] - eye[q]), r_prime, k)
                    + scalar_green(r - step * (eye[p] + eye[q]), r_prime, k)
                ) / (4 * step**2)
            out[p, q] = (g0 if p == q else 0.0) + second / k**2
    return out


def test_dyadic_green_oracle():
    with criterion("dyadic Green: finite-difference oracle 1e-6, reciprocity 1e-10"):
        rng = np.random.default_rng(77)
        for _ in range(100):
            direction = rng.normal(size=3)
            direction /= np.linalg.norm(direction)
            r = rng.normal(size=3)
            r_prime = r - rng.uniform(0.5, 50.0) * direction  # kR in [pi, 100*pi]
            closed = dyadic_green(r, r_prime)
            fd = _fd_dyad(r, r_prime)
            scale = np.abs(closed).max()
            assert np.abs(closed - fd).max() < 1e-6 * scale
            assert np.abs(closed - dyadic_green(r_prime, r)).max() <= 1e-10 * scale


# --------------------------------------------------------------------------
# 6. capacity oracles
# --------------------------------------------------------------------------

def test_capacity_oracles():
    with criterion("capacity: SVD oracle 1e-9; SISO ergodic vs quadrature within 1%"):
        gamma = db_to_linear(10.0)
        rng = np.random.default_rng(123)
        for _ in range(10):
            h = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            svd_value = np.sum(
                np.log2(1 + (gamma / 4) * np.linalg.svd(h, compute_uv=False) ** 2)
            )
            assert det_capacity(h, gamma, 4) == pytest.approx(svd_value, abs=1e-9)

        start = time.monotonic()
        spec = ChannelEnsembleSpec(
            correlation=np.eye(1, dtype=complex),
            efficiency=1.0,
            n_tx=1,
            seed=8675309,
            trials=100_000,
        )
        est = ergodic_capacity(spec, gamma)
        elapsed = time.monotonic() - start
        oracle, _ = quad(lambda x: np.log2(1 + gamma * x) * np.exp(-x), 0, np.inf)
        assert est.mean == pytest.approx(oracle, rel=0.01)
        assert elapsed < 30.0, f"SISO ergodic benchmark took {elapsed:.1f}s"


# --------------------------------------------------------------------------
# 7. far-field density sweep shape
# --------------------------------------------------------------------------

def test_farfield_density_sweep():
    with criterion(
        "far-field sweep: dipole capacity declines past half-wavelength pitch; "
        "atomic leads at half-wavelength by > 2 SE; < 5 min"
    ):
        cfg = SweepConfig(
            experiment="farfield",
            side_counts=tuple(range(2, 17)),
            systems=("rydberg", "dipole-1pol"),
            snr_db=10.0,
            seed=20240,
            trials=2000,
        )
        start = time.monotonic()
        res = run_farfield(cfg)
        elapsed = time.monotonic() - start
        assert elapsed < 300.0, f"sweep took {elapsed:.0f}s"

        n, c_ryd, se_ryd = res.capacities("rydberg")
        _, c_dip, se_dip = res.capacities("dipole-1pol")
        assert np.array_equal(n, np.arange(2, 17))

        # (a) the dipole curve decreases wherever pitch drops below 0.5
        below_half = np.nonzero(5.0 / n < 0.5)[0]
        for idx in below_half:
            drop = c_dip[idx - 1] - c_dip[idx]
            noise = 2.0 * np.hypot(se_dip[idx - 1], se_dip[idx])
            assert drop > noise, f"no decline at N={n[idx]}: drop {drop:.3f}"

        # (b) atomic receiver leads at exactly half-wavelength pitch
        at_half = int(np.nonzero(n == 10)[0][0])
        gap = c_ryd[at_half] - c_dip[at_half]
        assert gap > 2.0 * np.hypot(se_ryd[at_half], se_dip[at_half])


# --------------------------------------------------------------------------
# 8. near-field distance sweep shape
# --------------------------------------------------------------------------

def test_nearfield_distance_sweep():
    with criterion(
        "near-field sweep: atomic >= classical at 1 wavelength, gap < 2% at 100; < 1 min"
    ):
        cfg = SweepConfig(
            experiment="nearfield",
            aperture=5.0,
            distances=(1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0),
            systems=("rydberg", "dipole-1pol"),
            snr_db=10.0,
        )
        start = time.monotonic()
        res = run_nearfield(cfg)
        elapsed = time.monotonic() - start
        assert elapsed < 60.0, f"sweep took {elapsed:.1f}s"

        d, c_ryd, _ = res.capacities("rydberg")
        _, c_cls, _ = res.capacities("dipole-1pol")
        gaps = c_ryd - c_cls
        assert gaps[0] >= 0.0
        assert np.all(gaps >= -1e-9)
        assert np.all(np.diff(gaps) <= 1e-9)  # gap closes with distance
        assert gaps[-1] / c_cls[-1] < 0.02


# --------------------------------------------------------------------------
# 9. end-to-end determinism
# --------------------------------------------------------------------------

def test_csv_determinism():
    with criterion("determinism: identical config gives byte-identical CSV"):
        near = SweepConfig(
            experiment="nearfield",
            aperture=2.0,
            distances=(1.0, 10.0),
            systems=("rydberg", "dipole-1pol"),
        )
        far = SweepConfig(
            experiment="farfield",
            side_counts=(2, 3),
            systems=("rydberg", "dipole-1pol"),
            trials=50,
            seed=99,
        )
        base = (format_csv(run_nearfield(near)), format_csv(run_farfield(far)))
        # same bytes regardless of the ambient BLAS thread budget
        with threadpool_limits(limits=4):
            threaded = (format_csv(run_nearfield(near)), format_csv(run_farfield(far)))
        repeat = (format_csv(run_nearfield(near)), format_csv(run_farfield(far)))
        assert base == threaded == repeat
        assert base[0].encode("utf-8") == base[0].encode("ascii")
