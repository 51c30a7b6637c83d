"""Command-line interface: sweeps, dispersion tables, radii, self-checks.

Subcommands
-----------
``sweep --config FILE --output FILE.csv``
    Purcell factors and channel breakdowns over a frequency grid, one row
    per (frequency, radius, coupling).
``dispersion --config FILE --output FILE.csv``
    Permittivity, permeability and refractive index over the grid.
``radii --config FILE``
    Conversion table between radius targets, hard-sphere radii in
    angstrom and the Gaussian averaging scale.
``verify [SUITE]``
    Run the self-check suites (identities, conventions, oracle, duality
    or all); exit status 1 if any residual exceeds its tolerance.

Configuration is a single JSON document; see :data:`CONFIG_EXAMPLE` or
the README for the schema.  All rate computation happens in natural
units; the reference wavelength only converts radii.  Output CSV is
UTF-8 with LF line endings and 12 significant digits, byte-for-byte
reproducible for identical configurations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .correlators import NoiseConvention
from .decay import Coupling, Dipole, gamma_from_correlators
from .greens import AveragingSphere
from .medium import LorentzOscillator, MediumModel, sample
from .units import RadiusConversion, convert_radius, radius_from_angstrom
from .verify import run_suites

__all__ = [
    "SweepConfig",
    "SweepRow",
    "config_from_dict",
    "load_config",
    "default_config_dict",
    "resolve_radii",
    "run_sweep",
    "emit_csv",
    "dispersion_rows",
    "emit_dispersion_csv",
    "radii_lines",
    "main",
]

CSV_HEADER = (
    "omega_over_omegaTe,R_sphere_angstrom,coupling,purcell,"
    "far_field,heating_1overR,dipole_dipole_1overR3"
)
DISPERSION_HEADER = "omega_over_omegaTe,eps_re,eps_im,mu_re,mu_im,n_re,n_im"

SCHEMA_VERSION = 1

# Canonical coupling order used for row emission.
_COUPLING_ORDER = (Coupling.H, Coupling.B, Coupling.LOCAL, Coupling.ELECTRIC_LOCAL)

CONFIG_EXAMPLE = {
    "schema_version": 1,
    "medium": {
        "electric": [{"omega_L": 0.5, "omega_T": 1.0, "gamma": 0.1}],
        "magnetic": [{"omega_L": 0.125, "omega_T": 0.5, "gamma": 0.1}],
    },
    "lambda_Te_nm": 100.0,
    "radii": {"targets": [0.01, 0.03, 0.1]},
    "omega_grid": {"min": 0.05, "max": 1.5, "count": 300},
    "couplings": ["H", "B", "Local"],
    "convention": "H",
    "m": 1.0,
}


@dataclass(frozen=True)
class SweepConfig:
    """Validated sweep configuration (frequencies in reference units)."""

    medium: MediumModel
    lambda_ref_nm: float
    radius_targets: tuple[float, ...] | None
    radius_angstrom: tuple[float, ...] | None
    omega_min: float
    omega_max: float
    omega_count: int
    couplings: tuple[Coupling, ...]
    convention: NoiseConvention
    m: float

    def omega_grid(self) -> np.ndarray:
        return np.linspace(self.omega_min, self.omega_max, self.omega_count)


@dataclass(frozen=True)
class SweepRow:
    omega: float
    r_sphere_angstrom: float
    coupling: Coupling
    purcell: float
    far_field: float
    heating_1overR: float
    dipole_dipole_1overR3: float


def default_config_dict() -> dict:
    """A fresh copy of the bundled example configuration."""
    return json.loads(json.dumps(CONFIG_EXAMPLE))


def _oscillators(entries, where: str) -> tuple[LorentzOscillator, ...]:
    oscs = []
    for i, entry in enumerate(entries):
        try:
            oscs.append(
                LorentzOscillator(
                    omega_L=float(entry["omega_L"]),
                    omega_T=float(entry["omega_T"]),
                    gamma=float(entry["gamma"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"config: bad oscillator {where}[{i}]: {exc}") from exc
    return tuple(oscs)


def config_from_dict(data: dict) -> SweepConfig:
    """Validate a parsed JSON document into a :class:`SweepConfig`."""
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValueError(
            f"config: schema_version must be {SCHEMA_VERSION}, got {version!r}"
        )
    medium_spec = data.get("medium", {})
    model = MediumModel(
        electric=_oscillators(medium_spec.get("electric", []), "medium.electric"),
        magnetic=_oscillators(medium_spec.get("magnetic", []), "medium.magnetic"),
    )
    radii_spec = data.get("radii", {})
    targets = radii_spec.get("targets")
    angstrom = radii_spec.get("angstrom")
    if (targets is None) == (angstrom is None):
        raise ValueError(
            "config: radii must contain exactly one of 'targets' or 'angstrom'"
        )
    values = targets if targets is not None else angstrom
    if not values:
        raise ValueError("config: radii list must be non-empty")

    grid = data.get("omega_grid", {})
    try:
        omega_min = float(grid["min"])
        omega_max = float(grid["max"])
        omega_count = int(grid["count"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"config: bad omega_grid: {exc}") from exc
    if not omega_min > 0:
        raise ValueError(f"config: omega_grid.min must be > 0, got {omega_min}")
    if omega_max <= omega_min:
        raise ValueError("config: omega_grid.max must exceed omega_grid.min")
    if omega_count < 2:
        raise ValueError(f"config: omega_grid.count must be >= 2, got {omega_count}")

    try:
        couplings = tuple(Coupling(c) for c in data.get("couplings", ["H"]))
    except ValueError as exc:
        raise ValueError(
            f"config: couplings must be drawn from "
            f"{[c.value for c in _COUPLING_ORDER]}: {exc}"
        ) from exc
    if not couplings:
        raise ValueError("config: couplings must be non-empty")

    try:
        convention = NoiseConvention(data.get("convention", "H"))
    except ValueError as exc:
        raise ValueError("config: convention must be 'H' or 'B'") from exc

    m = float(data.get("m", 1.0))
    if not m > 0:
        raise ValueError(f"config: m must be > 0, got {m}")
    lambda_ref_nm = float(data.get("lambda_Te_nm", 100.0))
    if not lambda_ref_nm > 0:
        raise ValueError(f"config: lambda_Te_nm must be > 0, got {lambda_ref_nm}")

    return SweepConfig(
        medium=model,
        lambda_ref_nm=lambda_ref_nm,
        radius_targets=tuple(float(t) for t in targets) if targets else None,
        radius_angstrom=tuple(float(a) for a in angstrom) if angstrom else None,
        omega_min=omega_min,
        omega_max=omega_max,
        omega_count=omega_count,
        couplings=couplings,
        convention=convention,
        m=m,
    )


def load_config(path: str) -> SweepConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SystemExit(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SystemExit(f"config {path} is not valid JSON: {exc}") from exc
    return config_from_dict(data)


def resolve_radii(config: SweepConfig) -> list[RadiusConversion]:
    """Resolve the configured radii against the reference-frequency index."""
    ref = sample(config.medium, 1.0)
    if config.radius_targets is not None:
        conversions = [
            convert_radius(t, ref, config.lambda_ref_nm)
            for t in config.radius_targets
        ]
    else:
        conversions = [
            radius_from_angstrom(a, ref, config.lambda_ref_nm)
            for a in config.radius_angstrom
        ]
    return sorted(conversions, key=lambda c: c.R)


def _sweep_point(config: SweepConfig, omega: float,
                 radii: list[RadiusConversion]) -> list[SweepRow]:
    s = sample(config.medium, omega)
    dipole = Dipole(m=config.m, omega_A=omega)
    rows = []
    for conv in radii:
        sphere = AveragingSphere(conv.R)
        for coupling in _COUPLING_ORDER:
            if coupling not in config.couplings:
                continue
            result = gamma_from_correlators(
                dipole, s, sphere, coupling, config.convention
            )
            g0 = result.gamma_0
            rows.append(
                SweepRow(
                    omega=omega,
                    r_sphere_angstrom=conv.r_sphere_angstrom,
                    coupling=coupling,
                    purcell=result.purcell,
                    far_field=result.channels.far_field / g0,
                    heating_1overR=result.channels.heating_1overR / g0,
                    dipole_dipole_1overR3=result.channels.dipole_dipole_1overR3 / g0,
                )
            )
    return rows


def run_sweep(config: SweepConfig) -> list[SweepRow]:
    """Evaluate the configured sweep.

    Rows are ordered by frequency ascending, then radius ascending, then
    coupling in the canonical order H, B, Local, ElectricLocal.  Channel
    columns are the channel rates divided by the free-space rate, so the
    Purcell column is their sum.  Any domain error aborts with the
    offending grid point named.

    The environment variable ``MAGPURCELL_THREADS`` selects the number of
    worker threads (default 1); ordering is independent of it.
    """
    radii = resolve_radii(config)
    omegas = [float(w) for w in config.omega_grid()]
    threads = int(os.environ.get("MAGPURCELL_THREADS", "1"))
    try:
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                per_point = list(
                    pool.map(lambda w: _sweep_point(config, w, radii), omegas)
                )
        else:
            per_point = [_sweep_point(config, w, radii) for w in omegas]
    except ValueError as exc:
        raise SystemExit(f"sweep aborted: {exc}") from exc
    rows = [row for point in per_point for row in point]
    bad = [r for r in rows if not np.isfinite(r.purcell)]
    if bad:
        r = bad[0]
        raise SystemExit(
            f"sweep aborted: non-finite result at omega={r.omega:g}, "
            f"R_sphere={r.r_sphere_angstrom:g} A, coupling={r.coupling.value}"
        )
    return rows


def _fmt(value: float) -> str:
    return format(value, ".12g")


def emit_csv(rows: list[SweepRow], path: str):
    """Write sweep rows as CSV (UTF-8, LF, 12 significant digits)."""
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(CSV_HEADER + "\n")
            for r in rows:
                fh.write(
                    ",".join(
                        (
                            _fmt(r.omega),
                            _fmt(r.r_sphere_angstrom),
                            r.coupling.value,
                            _fmt(r.purcell),
                            _fmt(r.far_field),
                            _fmt(r.heating_1overR),
                            _fmt(r.dipole_dipole_1overR3),
                        )
                    )
                    + "\n"
                )
    except OSError as exc:
        raise SystemExit(f"cannot write {path}: {exc}") from exc


def dispersion_rows(config: SweepConfig) -> list[tuple]:
    """Medium response over the configured grid."""
    rows = []
    for w in config.omega_grid():
        s = sample(config.medium, float(w))
        rows.append(
            (float(w), s.eps.real, s.eps.imag, s.mu.real, s.mu.imag,
             s.n.real, s.n.imag)
        )
    return rows


def emit_dispersion_csv(rows: list[tuple], path: str):
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(DISPERSION_HEADER + "\n")
            for row in rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
    except OSError as exc:
        raise SystemExit(f"cannot write {path}: {exc}") from exc


def radii_lines(config: SweepConfig) -> list[str]:
    """Human-readable radius conversion table."""
    ref = sample(config.medium, 1.0)
    lines = [
        f"reference wavelength: {config.lambda_ref_nm:g} nm, "
        f"|n(omega_ref)| = {abs(ref.n):.6g}",
        "target |n w R_sphere|   R_sphere [angstrom]   R_gauss [natural units]",
    ]
    for conv in resolve_radii(config):
        lines.append(
            f"{conv.target:>20.6g}   {conv.r_sphere_angstrom:>19.6g}   "
            f"{conv.R:>23.6g}"
        )
    return lines


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="magpurcell",
        description=(
            "Decay rates and Purcell factors of dipoles in absorbing "
            "magneto-dielectric media"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="Purcell-factor sweep to CSV")
    p_sweep.add_argument("--config", required=True, help="JSON config file")
    p_sweep.add_argument("--output", required=True, help="output CSV path")

    p_disp = sub.add_parser("dispersion", help="medium response table to CSV")
    p_disp.add_argument("--config", required=True)
    p_disp.add_argument("--output", required=True)

    p_radii = sub.add_parser("radii", help="print the radius conversion table")
    p_radii.add_argument("--config", required=True)

    p_verify = sub.add_parser("verify", help="run self-check suites")
    p_verify.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=["all", "identities", "conventions", "oracle", "duality"],
    )

    args = parser.parse_args(argv)

    if args.command == "sweep":
        emit_csv(run_sweep(load_config(args.config)), args.output)
        return 0
    if args.command == "dispersion":
        emit_dispersion_csv(dispersion_rows(load_config(args.config)), args.output)
        return 0
    if args.command == "radii":
        print("\n".join(radii_lines(load_config(args.config))))
        return 0
    # verify
    reports = run_suites((args.suite,))
    for report in reports:
        print(report.line())
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
