"""zpfcross: zero-point-field turbulence spectra, the vacuum/turbulence
crossover scale, and the dissipation bound on the turbulence degree.

The pipeline, bottom to top:

- ``quantity``: SI values with exact rational dimension exponents and
  first-order uncertainty arithmetic.
- ``constants``: the constant registry (2006 CODATA plus a fixed Hubble
  measurement) and the derived critical density and Hubble radius.
- ``spectra``: Boyer vacuum spectrum, power-law and compressible
  turbulence spectra, and the energy-budget amplitude calibration.
- ``transition``: the crossover scale lambda0 with its error budget,
  checked three ways (closed form, bisection, Monte Carlo).
- ``dissipation``: the energy-dissipation budget and the bound it puts
  on the turbulence degree kappa.
- ``report``: parameter sweeps and table/CSV rendering; ``cli`` ties it
  all together.
"""

from .constants import (
    ConstantRegistry,
    CosmologyContext,
    PhysicalConstant,
    critical_density,
    hubble_radius,
    load_config,
    load_registry,
    parse_config,
)
from .dissipation import (
    DissipationBudget,
    dissipation_rate,
    kappa_from_count,
    kappa_from_solar_bound,
    n0_value,
    rescaled_count,
    solar_budget,
)
from .errors import (
    BadOverride,
    DegenerateSamples,
    DimensionMismatch,
    EmptySweep,
    InvalidBracket,
    KappaOutOfRange,
    KolmogorovPole,
    NegativeBase,
    NoCrossing,
    NonFinite,
    NonPositiveWavenumber,
    NumericFailure,
    PoleGamma,
    SlopeOutOfRange,
    ValidationError,
    ZpfcrossError,
)
from .quantity import (
    DIMENSIONLESS,
    Dimension,
    LENGTH,
    MASS,
    Quantity,
    TIME,
    UncertainQuantity,
    WAVENUMBER,
    combine,
    power,
    propagate,
)
from .report import ReportRow, SweepSpec, render, run_sweep
from .spectra import (
    Boyer,
    EnergyBudget,
    HorizonAmplitude,
    MoisseevShivamoggi,
    PowerLawTurbulence,
    SpectrumModel,
    TruncatedBoyer,
    amplitude_from_kappa,
    budget_roundtrip,
    energy_budget_total,
    evaluate,
    gamma_from_slope,
    horizon_injection_rate,
    horizon_spectrum_amplitude,
    slope_from_gamma,
)
from .transition import (
    MonteCarloScale,
    TransitionResult,
    kolmogorov_reference_scale,
    log_form_constants,
    log_form_scale,
    monte_carlo_scale,
    numeric_crossover,
    sigma_approximation,
    transition_scale,
)

__version__ = "0.1.0"
