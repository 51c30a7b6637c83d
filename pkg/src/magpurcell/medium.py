"""Dispersive magneto-dielectric response models.

Everything here works in natural units (c = 1, vacuum permittivity and
permeability equal to 1).  Frequencies are dimensionless multiples of a
reference frequency; lengths are the corresponding inverse frequencies.
Physical units (nanometres, angstrom) enter only at the CLI layer.

The medium is homogeneous and isotropic, with a relative permittivity and
permeability each built from a sum of damped oscillators,

    eps(w) = 1 - sum_j wL_j^2 / (w^2 - wT_j^2 + 2i g_j w),

and the refractive index n(w) = sqrt(eps * mu) on the branch with
Im(n) >= 0, so that waves attenuate in a passive medium.
"""

from __future__ import annotations

import cmath
import warnings
from dataclasses import dataclass

__all__ = [
    "SingularMediumError",
    "BranchAmbiguityWarning",
    "LorentzOscillator",
    "MediumModel",
    "MediumSample",
    "permittivity",
    "permeability",
    "refractive_index",
    "sample",
    "dual_medium",
    "example_medium",
]


class SingularMediumError(ValueError):
    """eps * mu vanished: no refractive index can be assigned."""


class BranchAmbiguityWarning(UserWarning):
    """Lossless input where Im(n) >= 0 does not single out one root."""


@dataclass(frozen=True)
class LorentzOscillator:
    """One damped-oscillator contribution to a response function.

    Parameters
    ----------
    omega_L : float
        Coupling (plasma-like) frequency, >= 0.
    omega_T : float
        Transverse resonance frequency, > 0.
    gamma : float
        Damping rate, strictly > 0.  The medium must absorb: the spatial
        regularisation downstream relies on a finite imaginary response.

    All three are in units of the reference frequency.
    """

    omega_L: float
    omega_T: float
    gamma: float

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError(f"gamma must be > 0 (absorbing medium), got {self.gamma}")
        if self.omega_L < 0:
            raise ValueError(f"omega_L must be >= 0, got {self.omega_L}")
        if not self.omega_T > 0:
            raise ValueError(f"omega_T must be > 0, got {self.omega_T}")

    def susceptibility(self, omega: float) -> complex:
        """-omega_L^2 / (omega^2 - omega_T^2 + 2i gamma omega)."""
        return -(self.omega_L**2) / (
            omega * omega - self.omega_T**2 + 2j * self.gamma * omega
        )


@dataclass(frozen=True)
class MediumModel:
    """Oscillator sets for the electric and magnetic response.

    Empty tuples mean the corresponding response is identically 1
    (vacuum-like).  Oscillators within one channel are summed.
    """

    electric: tuple[LorentzOscillator, ...] = ()
    magnetic: tuple[LorentzOscillator, ...] = ()

    def __post_init__(self):
        # Tolerate lists in user input; store immutably.
        object.__setattr__(self, "electric", tuple(self.electric))
        object.__setattr__(self, "magnetic", tuple(self.magnetic))

    @classmethod
    def vacuum(cls) -> "MediumModel":
        return cls()


@dataclass(frozen=True)
class MediumSample:
    """Medium response evaluated at a single frequency.

    Attributes
    ----------
    omega : float
        Evaluation frequency (> 0), in reference-frequency units.
    eps, mu, n : complex
        Permittivity, permeability and refractive index.  ``n*n`` must
        reproduce ``eps*mu`` to near machine precision and ``Im(n) >= 0``.
    """

    omega: float
    eps: complex
    mu: complex
    n: complex

    def __post_init__(self):
        if not self.omega > 0:
            raise ValueError(f"omega must be > 0, got {self.omega}")
        prod = self.eps * self.mu
        if abs(self.n * self.n - prod) > 1e-12 * max(abs(prod), 1e-300):
            raise ValueError("n**2 does not match eps*mu")
        if self.n.imag < 0:
            raise ValueError("Im(n) must be >= 0 (passive branch)")

    @property
    def is_passive(self) -> bool:
        """True when both response functions absorb (or are lossless)."""
        return self.eps.imag >= 0 and self.mu.imag >= 0


def permittivity(model: MediumModel, omega: float) -> complex:
    """Relative permittivity of ``model`` at frequency ``omega``.

    Raises
    ------
    ValueError
        If ``omega <= 0``.
    """
    if not omega > 0:
        raise ValueError(f"omega must be > 0, got {omega}")
    return 1 + sum((osc.susceptibility(omega) for osc in model.electric), 0j)


def permeability(model: MediumModel, omega: float) -> complex:
    """Relative permeability of ``model`` at frequency ``omega``."""
    if not omega > 0:
        raise ValueError(f"omega must be > 0, got {omega}")
    return 1 + sum((osc.susceptibility(omega) for osc in model.magnetic), 0j)


def refractive_index(eps: complex, mu: complex) -> complex:
    """Square root of ``eps*mu`` on the attenuating branch, Im(n) >= 0.

    For a lossless product that is real and positive the positive real
    root is returned.  Two lossless cases leave the branch genuinely
    ambiguous and raise :class:`BranchAmbiguityWarning` before returning
    the principal-branch value:

    * ``Im(eps*mu) == 0`` with ``Re(eps*mu) < 0`` (purely evanescent), and
    * both ``Re(eps) < 0`` and ``Re(mu) < 0`` with a lossless product
      (double-negative point, where the causal limit would favour the
      negative real root that the Im(n) >= 0 rule cannot see).

    Raises
    ------
    SingularMediumError
        If ``eps*mu == 0``.
    """
    eps = complex(eps)
    mu = complex(mu)
    prod = eps * mu
    if prod == 0:
        raise SingularMediumError("eps*mu = 0 has no refractive index")
    if prod.imag == 0.0 and (prod.real < 0 or (eps.real < 0 and mu.real < 0)):
        warnings.warn(
            "lossless eps*mu: Im(n) >= 0 does not fix the branch; "
            "returning the principal root",
            BranchAmbiguityWarning,
            stacklevel=2,
        )
    n = cmath.sqrt(prod)
    if n.imag < 0:
        n = -n
    return n


def sample(model: MediumModel, omega: float) -> MediumSample:
    """Evaluate permittivity, permeability and index at one frequency."""
    eps = permittivity(model, omega)
    mu = permeability(model, omega)
    return MediumSample(omega=omega, eps=eps, mu=mu, n=refractive_index(eps, mu))


def dual_medium(s: MediumSample) -> MediumSample:
    """Exchange eps and mu; the refractive index is unchanged.

    This is the quarter-turn duality image of the medium description.
    The operation is an involution.
    """
    return MediumSample(omega=s.omega, eps=s.mu, mu=s.eps, n=s.n)


def example_medium() -> MediumModel:
    """The bundled example medium used by the demos and golden files.

    One electric oscillator at the reference frequency and one magnetic
    oscillator at half of it, both with the same damping.
    """
    return MediumModel(
        electric=(LorentzOscillator(omega_L=0.5, omega_T=1.0, gamma=0.1),),
        magnetic=(LorentzOscillator(omega_L=0.125, omega_T=0.5, gamma=0.1),),
    )
