"""Conversion between physical radii and natural-unit averaging scales.

All computation runs in natural units where the reference frequency is 1
and c = 1, so the natural length unit is c over the reference frequency,
i.e. the reference wavelength divided by 2 pi.  This module is the single
place where a physical wavelength enters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .medium import MediumSample

__all__ = ["RadiusConversion", "convert_radius", "radius_from_angstrom"]

ANGSTROM_PER_NM = 10.0


@dataclass(frozen=True)
class RadiusConversion:
    """One resolved averaging radius.

    Attributes
    ----------
    target : float
        The dimensionless product |n(w_ref) w_ref r_sphere| the radius
        realises.
    r_sphere_angstrom : float
        Equivalent hard-sphere radius in angstrom.
    r_sphere : float
        The same radius in natural length units.
    R : float
        Gaussian averaging scale in natural units,
        R^3 = (4 pi / 3) r_sphere^3.
    """

    target: float
    r_sphere_angstrom: float
    r_sphere: float
    R: float


def _natural_length_angstrom(lambda_ref_nm: float) -> float:
    """Angstrom per natural length unit (lambda / 2 pi)."""
    if not lambda_ref_nm > 0:
        raise ValueError(f"reference wavelength must be > 0, got {lambda_ref_nm}")
    return lambda_ref_nm * ANGSTROM_PER_NM / (2.0 * math.pi)


def convert_radius(
    target: float, ref_sample: MediumSample, lambda_ref_nm: float
) -> RadiusConversion:
    """Resolve a target |n(w_ref) w_ref r_sphere| into radii.

    ``ref_sample`` must be the medium evaluated at the reference
    frequency (omega == 1 in natural units).
    """
    if not target > 0:
        raise ValueError(f"radius target must be > 0, got {target}")
    r_sphere = target / (abs(ref_sample.n) * ref_sample.omega)
    return RadiusConversion(
        target=target,
        r_sphere_angstrom=r_sphere * _natural_length_angstrom(lambda_ref_nm),
        r_sphere=r_sphere,
        R=(4.0 * math.pi / 3.0) ** (1.0 / 3.0) * r_sphere,
    )


def radius_from_angstrom(
    r_sphere_angstrom: float, ref_sample: MediumSample, lambda_ref_nm: float
) -> RadiusConversion:
    """Resolve a hard-sphere radius given in angstrom."""
    if not r_sphere_angstrom > 0:
        raise ValueError(f"radius must be > 0, got {r_sphere_angstrom}")
    r_sphere = r_sphere_angstrom / _natural_length_angstrom(lambda_ref_nm)
    return RadiusConversion(
        target=abs(ref_sample.n) * ref_sample.omega * r_sphere,
        r_sphere_angstrom=r_sphere_angstrom,
        r_sphere=r_sphere,
        R=(4.0 * math.pi / 3.0) ** (1.0 / 3.0) * r_sphere,
    )
