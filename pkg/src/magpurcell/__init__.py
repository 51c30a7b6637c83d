"""Decay rates of dipoles in homogeneous absorbing magneto-dielectrics.

Numerics for spontaneous-emission (Purcell) calculations of magnetic and
electric dipoles embedded in dispersive, absorbing media with both an
electric and a magnetic response, including virtual-cavity local-field
corrections, with machine-checked electromagnetic-duality and
noise-bookkeeping invariants.
"""

from .correlators import (
    CorrelatorCoefficient,
    NoiseConvention,
    PhaseConvention,
    bb_cc_averaged,
    e_pnoise_cross_cc,
    ee_cc_averaged,
    electric_local_field_cc_averaged,
    h_mnoise_cross_cc,
    hh_cc_averaged,
    local_field_cc_averaged,
    noise_magnetisation_cc,
    noise_polarisation_cc,
    polariton_map,
)
from .decay import (
    Coupling,
    DecayChannels,
    DecayResult,
    Dipole,
    DipoleKind,
    electric_dual,
    electric_gamma_h,
    electric_gamma_local,
    gamma_0,
    gamma_b,
    gamma_from_correlators,
    gamma_h,
    gamma_local,
)
from .duality import (
    TransformTable,
    UnsupportedAngleError,
    rotate_pair,
    transform_noise_h_convention,
    transform_table_b_convention,
    verify_expectation_duality,
)
from .greens import (
    AveragedGreens,
    AveragingSphere,
    DeltaAverage,
    QuadratureError,
    SingularModeError,
    TruncationWarning,
    averaged_delta,
    averaged_greens_analytic,
    averaged_greens_numeric,
    greens_identity_residual,
    transverse_greens_kmode,
    transverse_greens_near_field,
)
from .medium import (
    BranchAmbiguityWarning,
    LorentzOscillator,
    MediumModel,
    MediumSample,
    SingularMediumError,
    dual_medium,
    example_medium,
    permeability,
    permittivity,
    refractive_index,
    sample,
)
from .units import RadiusConversion, convert_radius, radius_from_angstrom

__version__ = "0.1.0"
