"""Self-check suites: the library's invariants run as batch verifications.

Four suites cover the load-bearing identities.  Each returns a
:class:`SuiteReport` with the worst observed residual and its tolerance;
the CLI maps failures to a nonzero exit status.

* ``identities``   per-k-mode absorption identity on random passive media,
                   index consistency, the exact 2:1 delta split.
* ``conventions``  equality of every assembled correlator and rate between
                   the two magnetic-noise bookkeepings.
* ``oracle``       quadrature average versus the small-R closed form
                   across the example medium's band.
* ``duality``      expectation-value duality term by term, the swap map on
                   rates against independently coded electric forms, and
                   the rotation group law.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .correlators import (
    NoiseConvention,
    bb_cc_averaged,
    h_mnoise_cross_cc,
    hh_cc_averaged,
    local_field_cc_averaged,
)
from .decay import (
    Coupling,
    Dipole,
    electric_gamma_h,
    electric_gamma_local,
    gamma_from_correlators,
    gamma_h,
    gamma_local,
)
from .duality import rotate_pair, verify_expectation_duality
from .greens import (
    AveragingSphere,
    averaged_delta,
    averaged_greens_analytic,
    averaged_greens_numeric,
    greens_identity_residual,
    transverse_greens_kmode,
)
from .medium import (
    LorentzOscillator,
    MediumModel,
    dual_medium,
    example_medium,
    sample,
)
from .units import convert_radius

__all__ = [
    "SuiteReport",
    "SUITE_NAMES",
    "run_suite",
    "run_suites",
    "band_grid",
    "reference_spheres",
]

SUITE_NAMES = ("identities", "conventions", "oracle", "duality")

BAND_MIN = 0.05
BAND_MAX = 1.5
REFERENCE_TARGETS = (0.01, 0.03, 0.1)


@dataclass(frozen=True)
class SuiteReport:
    name: str
    passed: bool
    worst: float
    tolerance: float
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name}: worst residual {self.worst:.3e} "
            f"(tolerance {self.tolerance:.3e}) - {self.detail}"
        )


def band_grid(count: int = 120) -> np.ndarray:
    """Frequency grid spanning the example medium's band."""
    return np.linspace(BAND_MIN, BAND_MAX, count)


def reference_spheres(model: MediumModel | None = None, lambda_ref_nm: float = 100.0):
    """The three averaging spheres used throughout the figures and checks."""
    model = model or example_medium()
    ref = sample(model, 1.0)
    return [
        AveragingSphere(convert_radius(t, ref, lambda_ref_nm).R)
        for t in REFERENCE_TARGETS
    ]


def _random_passive_model(rng: np.random.Generator) -> MediumModel:
    def osc():
        return LorentzOscillator(
            omega_L=rng.uniform(0.05, 2.0),
            omega_T=rng.uniform(0.1, 2.0),
            gamma=rng.uniform(0.01, 1.0),
        )

    return MediumModel(electric=(osc(),), magnetic=(osc(),))


def suite_identities(samples: int = 1000, seed: int = 7) -> SuiteReport:
    """Per-mode absorption identity, index consistency, delta split."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        model = _random_passive_model(rng)
        w = rng.uniform(0.01, 3.0)
        k = rng.uniform(0.0, 10.0)
        s = sample(model, w)
        im_g = transverse_greens_kmode(k, s).imag
        rel = abs(greens_identity_residual(k, s)) / max(abs(im_g), 1e-300)
        worst = max(worst, rel)
        worst = max(worst, abs(s.n * s.n - s.eps * s.mu) / abs(s.eps * s.mu))
    d = averaged_delta(AveragingSphere(0.37))
    split_err = abs(d.transverse - 2.0 * d.longitudinal) + abs(
        d.total - 1.0 / 0.37**3
    ) / (1.0 / 0.37**3)
    worst = max(worst, split_err)
    tol = 1e-12
    return SuiteReport(
        name="identities",
        passed=worst <= tol,
        worst=worst,
        tolerance=tol,
        detail=f"{samples} random (k, omega, medium) mode checks",
    )


def suite_conventions(grid_count: int = 120) -> SuiteReport:
    """H versus B bookkeeping across band, radii, correlators and rates."""
    model = example_medium()
    spheres = reference_spheres(model)
    worst = 0.0
    for w in band_grid(grid_count):
        s = sample(model, float(w))
        dip = Dipole(m=1.0, omega_A=float(w))
        for sphere in spheres:
            pairs = [
                (
                    bb_cc_averaged(s, sphere, NoiseConvention.H).value,
                    bb_cc_averaged(s, sphere, NoiseConvention.B).value,
                ),
                (
                    local_field_cc_averaged(s, sphere, NoiseConvention.H).value,
                    local_field_cc_averaged(s, sphere, NoiseConvention.B).value,
                ),
                (
                    h_mnoise_cross_cc(s, sphere, NoiseConvention.H).value,
                    s.mu.conjugate()
                    * h_mnoise_cross_cc(s, sphere, NoiseConvention.B).value,
                ),
                (hh_cc_averaged(s, sphere).value,) * 2,
            ]
            for coupling in (Coupling.H, Coupling.B, Coupling.LOCAL):
                pairs.append(
                    (
                        gamma_from_correlators(
                            dip, s, sphere, coupling, NoiseConvention.H
                        ).gamma_total,
                        gamma_from_correlators(
                            dip, s, sphere, coupling, NoiseConvention.B
                        ).gamma_total,
                    )
                )
            for a, b in pairs:
                scale = max(abs(a), abs(b), 1e-300)
                worst = max(worst, abs(a - b) / scale)
    tol = 1e-12
    return SuiteReport(
        name="conventions",
        passed=worst <= tol,
        worst=worst,
        tolerance=tol,
        detail=f"{grid_count}-point band x {len(spheres)} radii x 3 couplings",
    )


def suite_oracle(grid_count: int = 60) -> SuiteReport:
    """Quadrature average versus small-R closed form, banded tolerances.

    Points with |n w R| <= 0.03 must agree to 2 percent, points with
    |n w R| <= 0.1 to 10 percent; larger products are outside the closed
    form's validity and are skipped.
    """
    model = example_medium()
    spheres = reference_spheres(model)
    worst_ratio = 0.0  # residual / allowed, so the shared tolerance is 1
    worst_detail = ""
    checked = 0
    for w in band_grid(grid_count):
        s = sample(model, float(w))
        for sphere in spheres:
            x = abs(s.n) * s.omega * sphere.R
            if x > 0.1:
                continue
            allowed = 0.02 if x <= 0.03 else 0.10
            analytic = averaged_greens_analytic(s, sphere).coeff
            numeric = averaged_greens_numeric(s, sphere).coeff
            rel = abs(numeric - analytic) / abs(analytic)
            checked += 1
            if rel / allowed > worst_ratio:
                worst_ratio = rel / allowed
                worst_detail = (
                    f"omega={s.omega:.4g}, R={sphere.R:.4g}, |nwR|={x:.3g}, "
                    f"discrepancy {rel:.3%} (allowed {allowed:.0%})"
                )
    return SuiteReport(
        name="oracle",
        passed=worst_ratio <= 1.0,
        worst=worst_ratio,
        tolerance=1.0,
        detail=f"{checked} (omega, R) points; worst at {worst_detail}",
    )


def suite_duality(grid_count: int = 60, seed: int = 11) -> SuiteReport:
    """Expectation duality, swap map on rates, rotation group law."""
    model = example_medium()
    spheres = reference_spheres(model)
    worst = 0.0
    for w in band_grid(grid_count):
        s = sample(model, float(w))
        dip = Dipole(m=1.0, omega_A=float(w))
        for sphere in spheres:
            worst = max(worst, verify_expectation_duality(s, sphere).max_residual)
            for mag_op, elec_op in (
                (gamma_h, electric_gamma_h),
                (gamma_local, electric_gamma_local),
            ):
                a = mag_op(dip, dual_medium(s), sphere).gamma_total
                b = elec_op(dip, s, sphere).gamma_total
                worst = max(worst, abs(a - b) / max(abs(a), abs(b), 1e-300))
    rng = np.random.default_rng(seed)
    for _ in range(200):
        t1, t2 = rng.uniform(-math.pi, math.pi, size=2)
        a = rng.normal(size=3) + 1j * rng.normal(size=3)
        b = rng.normal(size=3) + 1j * rng.normal(size=3)
        step = rotate_pair(t2, *rotate_pair(t1, a, b))
        direct = rotate_pair(t1 + t2, a, b)
        err = max(
            np.max(np.abs(step[0] - direct[0])), np.max(np.abs(step[1] - direct[1]))
        )
        scale = max(np.max(np.abs(a)), np.max(np.abs(b)))
        worst = max(worst, err / scale)
    tol = 1e-12
    return SuiteReport(
        name="duality",
        passed=worst <= tol,
        worst=worst,
        tolerance=tol,
        detail=f"{grid_count}-point band x {len(spheres)} radii + 200 rotations",
    )


_SUITES = {
    "identities": suite_identities,
    "conventions": suite_conventions,
    "oracle": suite_oracle,
    "duality": suite_duality,
}


def run_suite(name: str) -> SuiteReport:
    try:
        fn = _SUITES[name]
    except KeyError:
        raise ValueError(
            f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)} or 'all'"
        ) from None
    return fn()


def run_suites(names=("all",)) -> list[SuiteReport]:
    if "all" in names:
        names = SUITE_NAMES
    return [run_suite(n) for n in names]
