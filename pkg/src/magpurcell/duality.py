"""Duality rotations of field pairs and the quarter-turn transform tables.

Maxwell's equations in a source-free medium are unchanged when the
electric and magnetic field pairs are mixed by a rotation

    (E, H) -> (cos t E + sin t H, -sin t E + cos t H),

applied equally to (D, B).  Field energy density and the Poynting vector
are invariant for every angle.  A quarter turn exchanges the roles of the
two response functions (eps <-> mu), which is the only angle supported
for medium and noise transforms here: any other angle would require a
magneto-electric constitutive law.

In the H noise convention the noise pair (electric noise, magnetic noise)
rotates exactly like a field pair.  In the B convention the operators
transform with medium-dependent multipliers instead (the table built by
:func:`transform_table_b_convention`), yet every expectation value
assembled from them is still dual symmetric;
:func:`verify_expectation_duality` checks that term by term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .correlators import (
    NoiseConvention,
    e_pnoise_cross_cc,
    ee_cc_averaged,
    h_mnoise_cross_cc,
    hh_cc_averaged,
    noise_magnetisation_cc,
    noise_polarisation_cc,
)
from .greens import AveragingSphere, averaged_delta
from .medium import MediumSample, dual_medium

__all__ = [
    "UnsupportedAngleError",
    "rotate_pair",
    "transform_noise_h_convention",
    "TransformRule",
    "TransformTable",
    "transform_table_b_convention",
    "DualityReport",
    "verify_expectation_duality",
]


class UnsupportedAngleError(ValueError):
    """Medium/noise transforms exist only for quarter-turn multiples."""


def rotate_pair(theta: float, a, b):
    """Rotate a pair of (scalar or vector) quantities by angle ``theta``."""
    c, s = math.cos(theta), math.sin(theta)
    a = np.asarray(a)
    b = np.asarray(b)
    return c * a + s * b, -s * a + c * b


def _quarter_turns(theta: float) -> int:
    k = round(theta / (math.pi / 2.0))
    if abs(theta - k * math.pi / 2.0) > 1e-12:
        raise UnsupportedAngleError(
            f"theta = {theta:g} is not a multiple of pi/2; general angles "
            "would need a magneto-electric response"
        )
    return k % 4


def transform_noise_h_convention(theta: float, p, m):
    """Quarter-turn rotation of the (electric, magnetic) noise pair.

    In the H convention the noise pair rotates exactly like a field
    pair; only multiples of pi/2 are allowed and the rotation is applied
    exactly (no trigonometric roundoff).
    """
    k = _quarter_turns(theta)
    p = np.asarray(p)
    m = np.asarray(m)
    for _ in range(k):
        p, m = m, -p
    return p, m


@dataclass(frozen=True)
class TransformRule:
    """Quarter-turn image of one labelled quantity.

    ``multiplier`` maps a medium sample to the complex factor attached to
    the target label; trivial rules use a constant.
    """

    target: str
    multiplier: Callable[[MediumSample], complex]

    def apply(self, s: MediumSample) -> tuple[str, complex]:
        return self.target, complex(self.multiplier(s))


@dataclass(frozen=True)
class TransformTable:
    """Label-indexed quarter-turn transform rules.

    Composing two applications must evaluate the second rule on the dual
    medium (the first turn re-labels the response functions); done that
    way, every field, dipole, noise and polariton label returns to itself
    with multiplier -1, a half turn.
    """

    rules: dict[str, TransformRule]

    def apply(self, label: str, s: MediumSample) -> tuple[str, complex]:
        try:
            rule = self.rules[label]
        except KeyError:
            raise KeyError(f"no transform rule for label {label!r}") from None
        return rule.apply(s)

    def apply_twice(self, label: str, s: MediumSample) -> tuple[str, complex]:
        mid, m1 = self.apply(label, s)
        end, m2 = self.apply(mid, dual_medium(s))
        return end, m1 * m2


def transform_table_b_convention() -> TransformTable:
    """Quarter-turn table for the B noise convention.

    Fields and dipoles rotate plainly; the noise and polariton operators
    carry medium-dependent multipliers (their transformation is not a
    rotation), which is exactly what restores duality of the assembled
    expectation values.
    """
    const = lambda value: (lambda s: value)  # noqa: E731
    rules = {
        "E": TransformRule("H", const(1.0)),
        "H": TransformRule("E", const(-1.0)),
        "d": TransformRule("m", const(1.0)),
        "m": TransformRule("d", const(-1.0)),
        "eps": TransformRule("mu", const(1.0)),
        "mu": TransformRule("eps", const(1.0)),
        "P_N": TransformRule("M_NB", lambda s: s.mu),
        "M_NB": TransformRule("P_N", lambda s: -1.0 / s.eps),
        "f_e": TransformRule("f_m", lambda s: -1j * s.mu / abs(s.mu)),
        "f_m": TransformRule("f_e", lambda s: -1j * abs(s.eps) / s.eps),
    }
    return TransformTable(rules=rules)


@dataclass(frozen=True)
class DualityReport:
    """Per-term relative residuals of the expectation-value duality check."""

    residuals: dict[str, float]

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())


def _rel(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b))
    if scale == 0.0:
        return 0.0
    return abs(a - b) / scale


def verify_expectation_duality(
    s: MediumSample, sphere: AveragingSphere
) -> DualityReport:
    """Check term-by-term duality of the B-convention local-field correlator.

    For each term of the local-field auto-correlator assembled with the B
    noise bookkeeping, the starred term is built mechanically from the
    transform table (labels swapped, operator multipliers applied, base
    correlators evaluated on the original medium) and compared against
    the corresponding electric-coupling term, obtained by evaluating the
    magnetic-form term on the dual medium.  The operators transform
    asymmetrically, the expectation values must not.
    """
    table = transform_table_b_convention()
    dual = dual_medium(s)
    d_perp = averaged_delta(sphere).transverse

    # Starred weights: the table sends the label "mu" to "eps" with unit
    # multiplier, so mu* is the original eps.
    _, mu_mult = table.apply("mu", s)
    mu_star = mu_mult * s.eps
    _, h_mult = table.apply("H", s)
    _, m_mult = table.apply("M_NB", s)

    # Field term  |(mu+2)/3|^2 <HH>  ->  |(mu*+2)/3|^2 |h_mult|^2 <EE>.
    lhs_field = (
        abs((mu_star + 2.0) / 3.0) ** 2
        * abs(h_mult) ** 2
        * ee_cc_averaged(s, sphere).value
    )
    rhs_field = (
        abs((dual.mu + 2.0) / 3.0) ** 2 * hh_cc_averaged(dual, sphere).value
    )

    # Noise term  (|mu|^2/9) <M_NB M_NB>  ->  (1/9) <P_N P_N>  via the
    # asymmetric rule M_NB -> -P_N/eps.
    lhs_noise = (
        (abs(mu_star) ** 2 / 9.0)
        * abs(m_mult) ** 2
        * noise_polarisation_cc(s).value
        * d_perp
    )
    rhs_noise = (
        (abs(dual.mu) ** 2 / 9.0)
        * noise_magnetisation_cc(dual, NoiseConvention.B).value
        * d_perp
    )

    # Cross term  ((mu+2)/9) mu* <H M_NB>  ->  ((eps+2)/9) <E P_N>.
    lhs_cross = (
        ((mu_star + 2.0) / 9.0)
        * mu_star.conjugate()
        * h_mult
        * m_mult.conjugate()
        * e_pnoise_cross_cc(s, sphere).value
    )
    rhs_cross = (
        ((dual.mu + 2.0) / 9.0)
        * dual.mu.conjugate()
        * h_mnoise_cross_cc(dual, sphere, NoiseConvention.B).value
    )

    lhs_total = lhs_field + lhs_noise + 2.0 * lhs_cross.real
    rhs_total = rhs_field + rhs_noise + 2.0 * rhs_cross.real

    return DualityReport(
        residuals={
            "field": _rel(lhs_field, rhs_field),
            "noise": _rel(lhs_noise, rhs_noise),
            "cross": _rel(lhs_cross, rhs_cross),
            "total": _rel(lhs_total, rhs_total),
        }
    )
