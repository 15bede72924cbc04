"""Simulation and analysis toolkit for a tunable low-energy coherent electron source.

Covers the full chain of a tip / two-aperture field-emission source feeding a
biprism interferometer: electrostatic field solving on an axisymmetric grid,
electron trajectory tracing, field-emission intensity modelling, fringe-pattern
generation and fitting, Wien-filter longitudinal-coherence analysis, and
second-order correlation recovery of dephased contrast from time-tagged
detector events.
"""

__version__ = "0.1.0"

from .beam_optics import (
    BeamParams,
    FringeFit,
    count_fringes,
    de_broglie,
    fit_fringes,
    fringe_spacing,
    intensity_pattern,
    magnification_from_measurement,
)
from .emission import FNParams, calibrate_fn, fn_plot, fn_rate
from .errors import (
    ConfigError,
    ConvergenceError,
    FitError,
    GeometryError,
    OutOfDomainError,
    TipsimError,
    TrajectoryError,
)
from .events import DephasingModel, EventList, g2_contrast, generate_events, histogram_contrast
from .fieldsolve import PotentialGrid, field_at, potential_at, solve_fixed, solve_laplace
from .geometry import ElectrodeVoltages, Geometry, build_geometry
from .kernels import kernel_backend
from .trajectories import (
    ParticleState,
    Trajectory,
    classify_bundle,
    integrate_trajectory,
    launch_at_rest,
    launch_fan,
    terminal_energy,
)
from .wien import (
    CoherenceResult,
    WienConfig,
    analyze_wien_sweep,
    contrast_envelope,
    matched_field,
    packet_shift,
    synthesize_wien_sweep,
)

__all__ = [
    "BeamParams",
    "CoherenceResult",
    "ConfigError",
    "ConvergenceError",
    "DephasingModel",
    "ElectrodeVoltages",
    "EventList",
    "FNParams",
    "FitError",
    "FringeFit",
    "Geometry",
    "GeometryError",
    "OutOfDomainError",
    "ParticleState",
    "PotentialGrid",
    "TipsimError",
    "Trajectory",
    "TrajectoryError",
    "WienConfig",
    "analyze_wien_sweep",
    "build_geometry",
    "calibrate_fn",
    "classify_bundle",
    "contrast_envelope",
    "count_fringes",
    "de_broglie",
    "field_at",
    "fit_fringes",
    "fn_plot",
    "fn_rate",
    "fringe_spacing",
    "g2_contrast",
    "generate_events",
    "histogram_contrast",
    "integrate_trajectory",
    "intensity_pattern",
    "kernel_backend",
    "launch_at_rest",
    "launch_fan",
    "magnification_from_measurement",
    "matched_field",
    "packet_shift",
    "potential_at",
    "solve_fixed",
    "solve_laplace",
    "synthesize_wien_sweep",
    "terminal_energy",
]
