"""Spatially averaged vacuum two-point functions of fields and noise.

Every quantity here is the complex scalar multiplying
``delta_ij delta(w - w')`` in a vacuum expectation value, with the
frequency delta stripped (the decay layer restores the 2 pi and evaluates
on shell) and only the transverse part of spatial deltas kept: the
radiative channel couples to transverse fields only.

Two bookkeeping conventions coexist for the magnetic noise: it can be
tied to mu (convention ``H``, correlator Im(mu)/pi) or to 1/mu
(convention ``B``, correlator Im(mu)/(pi |mu|^2), with compensating mu
factors in the field equations).  All assembled second moments must agree
between the two; the assembly below keeps the conventions' own weights so
that this equality is a genuine cross-check rather than a definition.

Auto-correlators (field-field, noise-noise, local-local) are real and
non-negative; the mixed field-noise correlator is complex and enters
assembled quantities only through the symmetrised combination
``2 Re[w * cross]``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .greens import (
    TRUNCATION_WARN_THRESHOLD,
    AveragingSphere,
    TruncationWarning,
    averaged_delta,
    averaged_greens_analytic,
    transverse_greens_kmode,
)
from .medium import MediumSample

__all__ = [
    "NoiseConvention",
    "PhaseConvention",
    "CorrelatorCoefficient",
    "noise_polarisation_cc",
    "noise_magnetisation_cc",
    "hh_cc_averaged",
    "hh_kmode_assembled",
    "h_mnoise_cross_cc",
    "bb_cc_averaged",
    "local_field_cc_averaged",
    "ee_cc_averaged",
    "e_pnoise_cross_cc",
    "electric_local_field_cc_averaged",
    "polariton_map",
    "averaged_electric_greens_coeff",
]


class NoiseConvention(Enum):
    """Which response function the magnetic noise bookkeeping follows."""

    H = "H"
    B = "B"


class PhaseConvention(Enum):
    """Phase linking the magnetic noise to its polariton operator.

    Only meaningful for :attr:`NoiseConvention.B`; the fluctuation
    spectrum, and hence every second moment, is phase independent.
    ``DUAL_SYMMETRIC`` is the choice that makes the operator-level
    transformation rules close under the quarter-turn duality map.
    """

    CONVENTIONAL = "conventional"
    DUAL_SYMMETRIC = "dual-symmetric"


@dataclass(frozen=True)
class CorrelatorCoefficient:
    """Scalar coefficient of delta_ij delta(w - w') in a two-point function.

    ``R`` is the averaging scale when the coefficient is a spatial
    average, ``None`` for pointwise densities.
    """

    value: complex
    kind: str
    omega: float
    R: float | None = None


def _check_passive(s: MediumSample):
    if not s.is_passive:
        raise ValueError(
            f"sample at omega={s.omega:g} is not passive "
            f"(Im eps={s.eps.imag:g}, Im mu={s.mu.imag:g})"
        )


def noise_polarisation_cc(s: MediumSample) -> CorrelatorCoefficient:
    """Electric noise density Im(eps)/pi (fluctuation-dissipation)."""
    _check_passive(s)
    return CorrelatorCoefficient(
        value=s.eps.imag / math.pi, kind="PP", omega=s.omega
    )


def noise_magnetisation_cc(
    s: MediumSample, conv: NoiseConvention = NoiseConvention.H
) -> CorrelatorCoefficient:
    """Magnetic noise density in either convention.

    Convention ``H``: Im(mu)/pi.  Convention ``B``: Im(mu)/(pi |mu|^2),
    the dissipative part of 1/mu with the sign absorbed.
    """
    _check_passive(s)
    if conv is NoiseConvention.H:
        value = s.mu.imag / math.pi
    else:
        value = s.mu.imag / (math.pi * abs(s.mu) ** 2)
    return CorrelatorCoefficient(
        value=value, kind=f"MM[{conv.value}]", omega=s.omega
    )


def hh_cc_averaged(s: MediumSample, sphere: AveragingSphere) -> CorrelatorCoefficient:
    """Averaged magnetic-field auto-correlator, (w^2/pi) Im <G>.

    Identical in both noise conventions: the extra |mu|^2 the B
    convention puts into the field equation cancels against the 1/|mu|^2
    in its noise spectrum.  :func:`hh_kmode_assembled` exhibits that
    cancellation mode by mode.
    """
    _check_passive(s)
    g = averaged_greens_analytic(s, sphere).coeff
    return CorrelatorCoefficient(
        value=(s.omega**2 / math.pi) * g.imag,
        kind="HH",
        omega=s.omega,
        R=sphere.R,
    )


def hh_kmode_assembled(
    k: float, s: MediumSample, conv: NoiseConvention
) -> float:
    """Per-k-mode field auto-correlator assembled from its noise sources.

    The field mode is g(k) acting on (mu-factor * w^2 * magnetic noise
    - i w curl(electric noise)/eps); squaring against the convention's
    own noise spectra gives

        |g|^2 (|f|^2 w^4 mm_conv + w^2 k^2 Im(eps)/(pi |eps|^2))

    with f = 1 (H convention) or f = mu (B convention).  Both conventions
    must reproduce (w^2/pi) Im g(k).
    """
    _check_passive(s)
    g = transverse_greens_kmode(k, s)
    mm = noise_magnetisation_cc(s, conv).value
    factor = 1.0 if conv is NoiseConvention.H else abs(s.mu) ** 2
    w = s.omega
    return abs(g) ** 2 * (
        factor * w**4 * mm + w**2 * k * k * s.eps.imag / (math.pi * abs(s.eps) ** 2)
    )


def h_mnoise_cross_cc(
    s: MediumSample,
    sphere: AveragingSphere,
    conv: NoiseConvention = NoiseConvention.H,
) -> CorrelatorCoefficient:
    """Averaged field/magnetic-noise cross correlator.

    Convention ``H``: (w^2/pi) Im(mu) <G>.  Convention ``B``:
    (w^2/pi) (Im(mu)/|mu|^2) mu <G>, so that mu* times the B value equals
    the H value.  Complex; assembled quantities use 2 Re[weight * value].
    """
    _check_passive(s)
    g = averaged_greens_analytic(s, sphere).coeff
    if conv is NoiseConvention.H:
        value = (s.omega**2 / math.pi) * s.mu.imag * g
    else:
        value = (s.omega**2 / math.pi) * (s.mu.imag / abs(s.mu) ** 2) * s.mu * g
    return CorrelatorCoefficient(
        value=value, kind=f"HM[{conv.value}]", omega=s.omega, R=sphere.R
    )


def bb_cc_averaged(
    s: MediumSample,
    sphere: AveragingSphere,
    conv: NoiseConvention = NoiseConvention.H,
) -> CorrelatorCoefficient:
    """Averaged induction auto-correlator (transverse part only).

    H convention, from B = mu H + M:

        |mu|^2 <HH> + mm_H * delta_perp + 2 Re[mu <HM>]

    B convention, from B = mu (H + M):

        |mu|^2 (<HH> + mm_B * delta_perp + 2 Re[<HM>_B])

    Both reduce to the same number; each path is assembled from its own
    convention's pieces.
    """
    hh = hh_cc_averaged(s, sphere).value
    mm = noise_magnetisation_cc(s, conv).value
    cross = h_mnoise_cross_cc(s, sphere, conv).value
    d_perp = averaged_delta(sphere).transverse
    mu = s.mu
    if conv is NoiseConvention.H:
        value = abs(mu) ** 2 * hh + mm * d_perp + 2.0 * (mu * cross).real
    else:
        value = abs(mu) ** 2 * (hh + mm * d_perp + 2.0 * cross.real)
    return CorrelatorCoefficient(
        value=value, kind=f"BB[{conv.value}]", omega=s.omega, R=sphere.R
    )


def local_field_cc_averaged(
    s: MediumSample,
    sphere: AveragingSphere,
    conv: NoiseConvention = NoiseConvention.H,
    phase: PhaseConvention = PhaseConvention.DUAL_SYMMETRIC,
) -> CorrelatorCoefficient:
    """Averaged auto-correlator of the virtual-cavity local field.

    The local field is (mu + 2) H / 3 plus one third of the magnetic
    noise (times mu in the B convention); the local induction and local
    field coincide by construction, so a single coefficient serves both.

    H convention:

        |(mu+2)/3|^2 <HH> + (1/9) mm_H delta_perp
        + 2 Re[((mu+2)/9) <HM>]

    B convention:

        |(mu+2)/3|^2 <HH> + (|mu|^2/9) mm_B delta_perp
        + 2 Re[((mu+2)/9) mu* <HM>_B]

    ``phase`` is accepted for interface symmetry with
    :func:`polariton_map`; second moments do not depend on it.
    """
    del phase  # second moments are phase independent
    hh = hh_cc_averaged(s, sphere).value
    mm = noise_magnetisation_cc(s, conv).value
    cross = h_mnoise_cross_cc(s, sphere, conv).value
    d_perp = averaged_delta(sphere).transverse
    mu = s.mu
    w_field = abs((mu + 2.0) / 3.0) ** 2
    if conv is NoiseConvention.H:
        value = (
            w_field * hh
            + mm * d_perp / 9.0
            + 2.0 * (((mu + 2.0) / 9.0) * cross).real
        )
    else:
        value = (
            w_field * hh
            + abs(mu) ** 2 * mm * d_perp / 9.0
            + 2.0 * (((mu + 2.0) / 9.0) * mu.conjugate() * cross).real
        )
    return CorrelatorCoefficient(
        value=value, kind=f"LocLoc[{conv.value}]", omega=s.omega, R=sphere.R
    )


# --- Electric-coupling counterparts -------------------------------------
#
# Independently coded duals (mu <-> eps exchanged by hand, not by calling
# the magnetic assembly on a swapped sample).  They are the reference side
# of every duality cross-check.


def averaged_electric_greens_coeff(s: MediumSample, sphere: AveragingSphere) -> complex:
    """Averaged electric Green's coefficient, (mu/6pi)(2/R + i n w)."""
    x = abs(s.n * s.omega * sphere.R)
    if x > TRUNCATION_WARN_THRESHOLD:
        warnings.warn(
            f"|n w R| = {x:.3g} exceeds {TRUNCATION_WARN_THRESHOLD}; "
            "the small-R average is inaccurate",
            TruncationWarning,
            stacklevel=2,
        )
    return (s.mu / (6.0 * math.pi)) * (2.0 / sphere.R + 1j * s.n * s.omega)


def ee_cc_averaged(s: MediumSample, sphere: AveragingSphere) -> CorrelatorCoefficient:
    """Averaged electric-field auto-correlator, (w^2/pi) Im <G_E>."""
    _check_passive(s)
    g = averaged_electric_greens_coeff(s, sphere)
    return CorrelatorCoefficient(
        value=(s.omega**2 / math.pi) * g.imag, kind="EE", omega=s.omega, R=sphere.R
    )


def e_pnoise_cross_cc(s: MediumSample, sphere: AveragingSphere) -> CorrelatorCoefficient:
    """Averaged electric-field/electric-noise cross correlator."""
    _check_passive(s)
    g = averaged_electric_greens_coeff(s, sphere)
    return CorrelatorCoefficient(
        value=(s.omega**2 / math.pi) * s.eps.imag * g,
        kind="EP",
        omega=s.omega,
        R=sphere.R,
    )


def electric_local_field_cc_averaged(
    s: MediumSample, sphere: AveragingSphere
) -> CorrelatorCoefficient:
    """Averaged auto-correlator of the electric virtual-cavity local field.

    |(eps+2)/3|^2 <EE> + (1/9) pp delta_perp + 2 Re[((eps+2)/9) <EP>].
    """
    ee = ee_cc_averaged(s, sphere).value
    pp = noise_polarisation_cc(s).value
    cross = e_pnoise_cross_cc(s, sphere).value
    d_perp = averaged_delta(sphere).transverse
    eps = s.eps
    value = (
        abs((eps + 2.0) / 3.0) ** 2 * ee
        + pp * d_perp / 9.0
        + 2.0 * (((eps + 2.0) / 9.0) * cross).real
    )
    return CorrelatorCoefficient(
        value=value, kind="ElocEloc", omega=s.omega, R=sphere.R
    )


def polariton_map(
    s: MediumSample,
    conv: NoiseConvention = NoiseConvention.H,
    phase: PhaseConvention = PhaseConvention.DUAL_SYMMETRIC,
) -> np.ndarray:
    """Diagonal map from polariton operators to (electric, magnetic) noise.

    Returns the full 2x2 complex coefficient matrix, normalisation
    included, so the noise auto-correlator densities are the squared
    moduli of the diagonal entries:

    * H convention:               diag(i sqrt(Im eps / pi), i sqrt(Im mu / pi))
    * B convention, conventional: diag(i sqrt(Im eps / pi), sqrt(Im mu / pi)/|mu|)
    * B convention, dual-symmetric phase:
                                  diag(i sqrt(Im eps / pi), i sqrt(Im mu / pi)/mu)

    All three magnetic entries share one modulus per convention; the
    phase never reaches a second moment.
    """
    _check_passive(s)
    e_entry = 1j * math.sqrt(s.eps.imag / math.pi)
    root_mu = math.sqrt(s.mu.imag / math.pi)
    if conv is NoiseConvention.H:
        m_entry = 1j * root_mu
    elif phase is PhaseConvention.CONVENTIONAL:
        m_entry = root_mu / abs(s.mu)
    else:
        m_entry = 1j * root_mu / s.mu
    return np.array([[e_entry, 0.0], [0.0, m_entry]], dtype=complex)
