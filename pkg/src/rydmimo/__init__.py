"""Capacity modeling of Rydberg-atom MIMO receivers.

An atomic receiver reads the Autler-Townes splitting of a driven
Rydberg transition, which depends only on the magnitude of the local
field: the array element behaves as an isotropic, polarization-blind
scalar sensor.  This package propagates that single physical fact into
MIMO channel models and capacity comparisons against classical dipole
arrays, at far field (correlated Rayleigh fading under isotropic
scattering) and at near field (deterministic dyadic Green's function
channels).
"""

from .arrays import ElementPattern, PlanarArray, pattern_value, uniform_planar_array
from .capacity import (
    CapacityEstimate,
    db_to_linear,
    det_capacity,
    ergodic_capacity,
    normalize,
)
from .errors import (
    ConfigError,
    DegenerateChannelError,
    DegeneratePatternError,
    NumericalError,
    SingularityError,
)
from .farfield import (
    ChannelEnsembleSpec,
    CorrelationMatrix,
    correlation,
    correlation_matrix,
    correlation_sqrt,
    dual_polarization_correlation,
    hannan_efficiency,
    sample_channel,
)
from .nearfield import (
    NearFieldScenario,
    classical_channel,
    dyadic_green,
    facing_scenario,
    rydberg_channel,
    scalar_green,
)
from .sensor import (
    HBAR,
    at_splitting,
    build_rotated_hamiltonian,
    eigenvalues,
    field_from_splitting,
    rabi_from_field,
)
from .experiments import (
    SweepConfig,
    SweepResult,
    SweepRow,
    emit_csv,
    format_csv,
    load_config,
    run,
    run_farfield,
    run_nearfield,
    system_element_gain,
)

__version__ = "0.1.0"

__all__ = [
    "HBAR",
    "CapacityEstimate",
    "ChannelEnsembleSpec",
    "ConfigError",
    "CorrelationMatrix",
    "DegenerateChannelError",
    "DegeneratePatternError",
    "ElementPattern",
    "NearFieldScenario",
    "NumericalError",
    "PlanarArray",
    "SingularityError",
    "SweepConfig",
    "SweepResult",
    "SweepRow",
    "at_splitting",
    "build_rotated_hamiltonian",
    "classical_channel",
    "correlation",
    "correlation_matrix",
    "correlation_sqrt",
    "db_to_linear",
    "det_capacity",
    "dual_polarization_correlation",
    "dyadic_green",
    "eigenvalues",
    "emit_csv",
    "ergodic_capacity",
    "facing_scenario",
    "field_from_splitting",
    "format_csv",
    "hannan_efficiency",
    "load_config",
    "normalize",
    "pattern_value",
    "rabi_from_field",
    "run",
    "run_farfield",
    "run_nearfield",
    "rydberg_channel",
    "sample_channel",
    "scalar_green",
    "system_element_gain",
    "uniform_planar_array",
]
