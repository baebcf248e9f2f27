"""Declarative capacity sweeps and their CSV serialization.

Two experiments are provided: a far-field sweep over array density at a
fixed aperture, and a near-field sweep over the distance between two
facing half-wavelength-pitch arrays.  Runs are deterministic for a
fixed seed; BLAS thread pools are pinned to one thread during the
computation so output bytes do not depend on the ambient thread count.
"""

from dataclasses import dataclass, field, replace

import numpy as np
from threadpoolctl import threadpool_limits

from .arrays import uniform_planar_array
from .capacity import db_to_linear, det_capacity, ergodic_capacity, normalize
from .errors import ConfigError
from .farfield import (
    DEFAULT_AZIMUTH_NODES,
    DEFAULT_POLAR_NODES,
    ChannelEnsembleSpec,
    correlation_matrix,
    dual_polarization_correlation,
    hannan_efficiency,
)
from .nearfield import classical_channel, facing_scenario, rydberg_channel

__all__ = [
    "SYSTEMS",
    "SweepConfig",
    "SweepRow",
    "SweepResult",
    "parse_config_file",
    "build_config",
    "load_config",
    "system_element_gain",
    "run",
    "run_farfield",
    "run_nearfield",
    "format_csv",
    "emit_csv",
]

SYSTEMS = ("rydberg", "dipole-1pol", "dipole-2pol")
EXPERIMENTS = ("farfield", "nearfield")

# Near-field element spacing is fixed at half a wavelength.
NEARFIELD_PITCH = 0.5

DEFAULT_SIDE_COUNTS = tuple(range(2, 17))
DEFAULT_DISTANCES = (1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0)


@dataclass(frozen=True)
class SweepConfig:
    """Validated description of one capacity sweep."""

    experiment: str
    side_counts: tuple = DEFAULT_SIDE_COUNTS
    distances: tuple = DEFAULT_DISTANCES
    systems: tuple = SYSTEMS
    aperture: float = 5.0
    snr_db: float = 10.0
    snr_db_overrides: dict = field(default_factory=dict)
    seed: int = 0
    trials: int = 2000
    polar_nodes: int = DEFAULT_POLAR_NODES
    azimuth_nodes: int = DEFAULT_AZIMUTH_NODES
    atomic_hannan: bool = True

    def system_snr(self, system):
        """Linear SNR for one system (per-system overrides allowed)."""
        return db_to_linear(self.snr_db_overrides.get(system, self.snr_db))


@dataclass(frozen=True)
class SweepRow:
    """One (sweep value, system) capacity record."""

    sweep: object
    system: str
    capacity_bits: float
    stderr: float


@dataclass
class SweepResult:
    """Ordered sweep records: sweep values outer, systems inner."""

    config: SweepConfig
    rows: list

    def capacities(self, system):
        """(sweep values, capacities, stderrs) arrays for one system."""
        picked = [r for r in self.rows if r.system == system]
        return (
            np.array([r.sweep for r in picked]),
            np.array([r.capacity_bits for r in picked]),
            np.array([r.stderr for r in picked]),
        )


# --------------------------------------------------------------------------
# configuration handling
# --------------------------------------------------------------------------

def parse_config_file(path):
    """Read a flat ``key = value`` file into a string dict.

    Blank lines and ``#`` comments are ignored.  Duplicate keys and
    malformed lines raise ConfigError with the line number.
    """
    raw = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line.rstrip()!r}")
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if not key:
            raise ConfigError(f"{path}:{lineno}: empty key")
        if key in raw:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        raw[key] = value
    return raw


def _parse_scalar(key, value, kind):
    try:
        if kind is bool:
            lowered = str(value).strip().lower()
            if lowered in ("true", "1", "yes", "on"):
                return True
            if lowered in ("false", "0", "no", "off"):
                return False
            raise ValueError(f"not a boolean: {value!r}")
        return kind(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"key {key!r}: {exc}") from exc


def _parse_list(key, value, kind):
    if isinstance(value, str):
        items = [v.strip() for v in value.split(",") if v.strip()]
    else:
        items = list(value)
    return tuple(_parse_scalar(key, v, kind) for v in items)


_SNR_OVERRIDE_PREFIX = "snr_db_"


def build_config(raw, **overrides):
    """Validate raw key/value settings into a SweepConfig.

    ``overrides`` (typically CLI flags) replace file values; a value of
    None means "not given".  Raises ConfigError naming the offending
    key for anything invalid.
    """
    merged = dict(raw)
    for key, value in overrides.items():
        if value is not None:
            merged[key] = value

    known = {
        "experiment", "aperture", "side_counts", "distances", "systems",
        "snr_db", "seed", "trials", "polar_nodes", "azimuth_nodes",
        "atomic_hannan",
    }
    snr_overrides = {}
    for key in list(merged):
        if key.startswith(_SNR_OVERRIDE_PREFIX) and key not in known:
            system = key[len(_SNR_OVERRIDE_PREFIX):]
            if system not in SYSTEMS:
                raise ConfigError(
                    f"key {key!r}: unknown system {system!r}; expected one of {SYSTEMS}"
                )
            snr_overrides[system] = _parse_scalar(key, merged.pop(key), float)
    unknown = sorted(set(merged) - known)
    if unknown:
        raise ConfigError(f"unknown config key(s): {', '.join(unknown)}")

    if "experiment" not in merged:
        raise ConfigError("key 'experiment': missing (farfield or nearfield)")
    experiment = str(merged["experiment"]).strip()
    if experiment not in EXPERIMENTS:
        raise ConfigError(
            f"key 'experiment': expected one of {EXPERIMENTS}, got {experiment!r}"
        )

    cfg = SweepConfig(experiment=experiment, snr_db_overrides=snr_overrides)

    if "systems" in merged:
        systems = _parse_list("systems", merged["systems"], str)
    elif experiment == "farfield":
        systems = SYSTEMS
    else:
        systems = ("rydberg", "dipole-1pol")
    if not systems:
        raise ConfigError("key 'systems': must list at least one system")
    bad = [s for s in systems if s not in SYSTEMS]
    if bad:
        raise ConfigError(f"key 'systems': unknown system(s) {bad}; expected {SYSTEMS}")
    cfg = replace(cfg, systems=systems)

    if "side_counts" in merged:
        side_counts = _parse_list("side_counts", merged["side_counts"], int)
        if experiment == "farfield" and not side_counts:
            raise ConfigError("key 'side_counts': sweep list must be non-empty")
        if any(n < 1 for n in side_counts):
            raise ConfigError("key 'side_counts': entries must be >= 1")
        cfg = replace(cfg, side_counts=side_counts)

    if "distances" in merged:
        distances = _parse_list("distances", merged["distances"], float)
        if experiment == "nearfield" and not distances:
            raise ConfigError("key 'distances': sweep list must be non-empty")
        if any(not np.isfinite(d) or d <= 0 for d in distances):
            raise ConfigError("key 'distances': entries must be positive and finite")
        cfg = replace(cfg, distances=distances)

    scalar_specs = [
        ("aperture", float, lambda v: v > 0, "must be > 0"),
        ("snr_db", float, np.isfinite, "must be finite"),
        ("seed", int, lambda v: 0 <= v < 2**64, "must be an unsigned 64-bit integer"),
        ("trials", int, lambda v: v >= 1, "must be >= 1"),
        ("polar_nodes", int, lambda v: v >= 1, "must be >= 1"),
        ("azimuth_nodes", int, lambda v: v >= 1, "must be >= 1"),
        ("atomic_hannan", bool, lambda v: True, ""),
    ]
    for key, kind, check, message in scalar_specs:
        if key not in merged:
            continue
        value = _parse_scalar(key, merged[key], kind)
        if not check(value):
            raise ConfigError(f"key {key!r}: {message}, got {value}")
        cfg = replace(cfg, **{key: value})

    return cfg


def load_config(path, **overrides):
    return build_config(parse_config_file(path), **overrides)


# --------------------------------------------------------------------------
# experiment runners
# --------------------------------------------------------------------------

def system_element_gain(system, element_area, atomic_hannan=True):
    """Per-element amplitude gain of one far-field system.

    The Hannan limit gives the element efficiency from its area; the
    sweep applies it as an *amplitude* factor on the channel (power
    factor e**2).  With the power-e convention the efficiency rolloff
    would exactly offset element-count growth on a fixed aperture and
    the dense-array capacity would saturate instead of declining past
    half-wavelength pitch, which is the regime the comparison is about.
    """
    if system == "rydberg":
        if not atomic_hannan:
            return 1.0
        return hannan_efficiency(element_area, "atomic")
    if system in ("dipole-1pol", "dipole-2pol"):
        return hannan_efficiency(element_area, "dipole")
    raise ConfigError(f"key 'systems': unknown system {system!r}")


def _farfield_point(cfg, system, corr_cache):
    """Ergodic capacity of one (array density, system) sweep point."""
    arr = corr_cache["array"]
    kind = "isotropic" if system == "rydberg" else "dipole"
    if kind not in corr_cache:
        corr_cache[kind] = correlation_matrix(
            arr, kind, cfg.polar_nodes, cfg.azimuth_nodes
        ).matrix
    r = corr_cache[kind]
    gain = system_element_gain(system, arr.element_area, cfg.atomic_hannan)
    if system == "dipole-2pol":
        r = dual_polarization_correlation(r)
    ports = r.shape[0]
    spec = ChannelEnsembleSpec(
        correlation=r,
        efficiency=gain**2,
        n_tx=ports,
        seed=cfg.seed,
        trials=cfg.trials,
    )
    return ergodic_capacity(spec, cfg.system_snr(system))


def run_farfield(cfg):
    """Sweep array density N on a fixed aperture at far field.

    Each N x N receive array gets its pattern correlation matrix and a
    per-element amplitude gain from the Hannan limit (see
    ``system_element_gain``).  The transmit side is ideal with as many
    ports as the receiver, a symmetric-link convention that fixes the
    absolute capacity scale; dual polarization doubles the port count,
    so the per-port power split also covers splitting power between
    polarizations.
    """
    if cfg.experiment != "farfield":
        raise ConfigError(f"key 'experiment': expected 'farfield', got {cfg.experiment!r}")
    rows = []
    with threadpool_limits(limits=1):
        for n_side in cfg.side_counts:
            corr_cache = {"array": uniform_planar_array(cfg.aperture, n_side)}
            for system in cfg.systems:
                est = _farfield_point(cfg, system, corr_cache)
                rows.append(SweepRow(int(n_side), system, est.mean, est.stderr))
    return SweepResult(cfg, rows)


def run_nearfield(cfg):
    """Sweep the distance between two facing half-wavelength arrays.

    Channels are deterministic.  All systems at one distance share a
    single normalization constant fixed by the classical
    single-polarization channel, so relative amplitude advantages
    survive normalization.
    """
    if cfg.experiment != "nearfield":
        raise ConfigError(f"key 'experiment': expected 'nearfield', got {cfg.experiment!r}")
    n_side = round(cfg.aperture / NEARFIELD_PITCH)
    if n_side < 1:
        raise ConfigError(
            f"key 'aperture': too small for {NEARFIELD_PITCH}-wavelength pitch"
        )
    rows = []
    with threadpool_limits(limits=1):
        for distance in cfg.distances:
            scenario = facing_scenario(cfg.aperture, n_side, distance)
            reference = classical_channel(scenario)
            for system in cfg.systems:
                if system == "rydberg":
                    h = rydberg_channel(scenario, "x")
                elif system == "dipole-1pol":
                    h = reference
                else:
                    dual = facing_scenario(
                        cfg.aperture, n_side, distance,
                        tx_pols=("x", "y"), rx_pols=("x", "y"),
                    )
                    h = classical_channel(dual)
                h = normalize(h, mode="reference", reference=reference)
                cap = det_capacity(h, cfg.system_snr(system), n_tx=h.shape[1])
                rows.append(SweepRow(float(distance), system, cap, 0.0))
    return SweepResult(cfg, rows)


def run(cfg):
    if cfg.experiment == "farfield":
        return run_farfield(cfg)
    return run_nearfield(cfg)


# --------------------------------------------------------------------------
# CSV output
# --------------------------------------------------------------------------

CSV_HEADER = "sweep,system,capacity_bits,stderr"


def _format_number(value):
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def format_csv(result):
    """Render a SweepResult as CSV text (header + one line per row).

    Numbers use shortest round-trip decimal representation with '.'
    separators, so identical results format to identical bytes.
    """
    lines = [CSV_HEADER]
    for row in result.rows:
        lines.append(
            f"{_format_number(row.sweep)},{row.system},"
            f"{_format_number(row.capacity_bits)},{_format_number(row.stderr)}"
        )
    return "\n".join(lines) + "\n"


def emit_csv(result, path):
    """Write the sweep result to ``path`` as UTF-8 CSV."""
    text = format_csv(result)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
