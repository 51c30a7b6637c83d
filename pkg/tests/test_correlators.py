import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from magpurcell import (
    AveragingSphere,
    LorentzOscillator,
    MediumModel,
    MediumSample,
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
    sample,
)
from magpurcell.correlators import hh_kmode_assembled
from magpurcell.greens import averaged_delta, transverse_greens_kmode

CONVENTIONS = (NoiseConvention.H, NoiseConvention.B)


class TestNoiseDensities:
    def test_polarisation_vacuum(self, vacuum):
        assert noise_polarisation_cc(sample(vacuum, 1.0)).value == 0.0

    def test_polarisation_example(self, ref_sample):
        np.testing.assert_allclose(
            noise_polarisation_cc(ref_sample).value, 1.25 / math.pi, rtol=1e-14
        )

    def test_polarisation_nonnegative_on_band(self, model, band):
        for w in band[::7]:
            assert noise_polarisation_cc(sample(model, float(w))).value >= 0

    @pytest.mark.parametrize("conv", CONVENTIONS)
    def test_magnetisation_vacuum(self, vacuum, conv):
        assert noise_magnetisation_cc(sample(vacuum, 1.0), conv).value == 0.0

    def test_magnetisation_example(self, model):
        s = sample(model, 0.5)
        np.testing.assert_allclose(
            noise_magnetisation_cc(s, NoiseConvention.H).value,
            0.15625 / math.pi,
            rtol=1e-14,
        )

    def test_convention_identity_numeric(self, model, band):
        # value(B) * |mu|^2 == value(H), i.e. -Im(1/mu) == Im(mu)/|mu|^2.
        for w in band[::7]:
            s = sample(model, float(w))
            h = noise_magnetisation_cc(s, NoiseConvention.H).value
            b = noise_magnetisation_cc(s, NoiseConvention.B).value
            np.testing.assert_allclose(b * abs(s.mu) ** 2, h, rtol=1e-14)

    def test_convention_identity_symbolic(self):
        import sympy

        a, b = sympy.symbols("a b", real=True)
        mu = a + sympy.I * b
        diff = -sympy.im(1 / mu) - sympy.im(mu) / (a**2 + b**2)
        assert sympy.simplify(diff) == 0

    def test_passivity_required(self):
        gainy = MediumSample(
            omega=1.0, eps=1.0 - 0.5j, mu=1.0, n=-((1.0 - 0.5j) ** 0.5)
        )
        with pytest.raises(ValueError):
            noise_polarisation_cc(gainy)


class TestFieldAutoCorrelator:
    def test_vacuum_value(self, vacuum):
        for R in (0.01, 0.3):
            cc = hh_cc_averaged(sample(vacuum, 1.0), AveragingSphere(R))
            np.testing.assert_allclose(cc.value, 1.0 / (6.0 * math.pi**2), rtol=1e-12)

    def test_example_value(self, ref_sample):
        sphere = AveragingSphere(0.05)
        g = (ref_sample.eps / (6 * math.pi)) * (2 / 0.05 + 1j * ref_sample.n)
        np.testing.assert_allclose(
            hh_cc_averaged(ref_sample, sphere).value,
            g.imag / math.pi,
            rtol=1e-13,
        )

    @pytest.mark.parametrize("k", [0.0, 0.3, 1.7, 6.0])
    def test_kmode_assembly_conventions_agree(self, ref_sample, k):
        # Mode by mode, both noise bookkeepings reproduce (w^2/pi) Im g.
        target = (ref_sample.omega**2 / math.pi) * transverse_greens_kmode(
            k, ref_sample
        ).imag
        for conv in CONVENTIONS:
            np.testing.assert_allclose(
                hh_kmode_assembled(k, ref_sample, conv), target, rtol=1e-12
            )


class TestCrossCorrelator:
    def test_vacuum_vanishes(self, vacuum):
        s = sample(vacuum, 1.0)
        for conv in CONVENTIONS:
            assert h_mnoise_cross_cc(s, AveragingSphere(0.05), conv).value == 0.0

    def test_conventions_combine_identically(self, model, band, spheres):
        # mu* <H M_B> must reproduce the H-convention correlator.
        for w in band[::11]:
            s = sample(model, float(w))
            for sphere in spheres:
                h = h_mnoise_cross_cc(s, sphere, NoiseConvention.H).value
                b = h_mnoise_cross_cc(s, sphere, NoiseConvention.B).value
                combined = s.mu.conjugate() * b
                assert abs(combined - h) / abs(h) < 1e-12

    def test_vanishes_for_purely_dielectric(self):
        s = MediumSample(omega=1.0, eps=1.0 + 1.25j, mu=1.0, n=(1.0 + 1.25j) ** 0.5)
        for conv in CONVENTIONS:
            assert h_mnoise_cross_cc(s, AveragingSphere(0.05), conv).value == 0.0


class TestInductionCorrelator:
    def test_vacuum_equals_field_correlator(self, vacuum):
        s = sample(vacuum, 1.0)
        sphere = AveragingSphere(0.05)
        assert bb_cc_averaged(s, sphere).value == hh_cc_averaged(s, sphere).value

    def test_positive_over_band_and_radii(self, model, band, spheres):
        for w in band[::3]:
            s = sample(model, float(w))
            for sphere in spheres:
                for conv in CONVENTIONS:
                    assert bb_cc_averaged(s, sphere, conv).value >= 0

    def test_noise_term_dominates_at_magnetic_resonance(self, model):
        # At the magnetic resonance the 1/R^3 noise term dwarfs the
        # field and cross contributions.
        s = sample(model, 0.5)
        sphere = AveragingSphere(0.05)
        d_perp = averaged_delta(sphere).transverse
        noise_term = noise_magnetisation_cc(s, NoiseConvention.H).value * d_perp
        field_term = abs(s.mu) ** 2 * hh_cc_averaged(s, sphere).value
        cross_term = 2.0 * (
            s.mu * h_mnoise_cross_cc(s, sphere, NoiseConvention.H).value
        ).real
        total = bb_cc_averaged(s, sphere, NoiseConvention.H).value
        assert noise_term > 10 * abs(field_term)
        assert noise_term > 10 * abs(cross_term)
        np.testing.assert_allclose(
            total, field_term + noise_term + cross_term, rtol=1e-12
        )


class TestLocalFieldCorrelator:
    def test_vacuum_reduces_to_field_correlator(self, vacuum):
        s = sample(vacuum, 1.0)
        sphere = AveragingSphere(0.07)
        for conv in CONVENTIONS:
            assert (
                local_field_cc_averaged(s, sphere, conv).value
                == hh_cc_averaged(s, sphere).value
            )

    def test_convention_equivalence_over_band(self, model, band, spheres):
        worst = 0.0
        for w in band[::5]:
            s = sample(model, float(w))
            for sphere in spheres:
                h = local_field_cc_averaged(s, sphere, NoiseConvention.H).value
                b = local_field_cc_averaged(s, sphere, NoiseConvention.B).value
                worst = max(worst, abs(h - b) / max(abs(h), abs(b)))
        assert worst < 1e-12

    def test_phase_never_reaches_second_moments(self, model, spheres):
        s = sample(model, 0.5)
        values = {
            local_field_cc_averaged(s, spheres[0], NoiseConvention.B, phase).value
            for phase in PhaseConvention
        }
        assert len(values) == 1

    def test_local_induction_equals_local_field(self, model, spheres):
        # The local induction and local magnetic field are one operator,
        # so the two convention assemblies measure the same correlator.
        s = sample(model, 0.5)
        h = local_field_cc_averaged(s, spheres[0], NoiseConvention.H).value
        b = local_field_cc_averaged(s, spheres[0], NoiseConvention.B).value
        np.testing.assert_allclose(h, b, rtol=1e-13)


class TestElectricCounterparts:
    def test_vacuum_matches_magnetic(self, vacuum):
        s = sample(vacuum, 1.0)
        sphere = AveragingSphere(0.05)
        assert ee_cc_averaged(s, sphere).value == hh_cc_averaged(s, sphere).value
        assert e_pnoise_cross_cc(s, sphere).value == 0.0
        assert (
            electric_local_field_cc_averaged(s, sphere).value
            == hh_cc_averaged(s, sphere).value
        )

    def test_autocorrelators_real_nonnegative(self, model, band, spheres):
        for w in band[::9]:
            s = sample(model, float(w))
            for sphere in spheres:
                for value in (
                    ee_cc_averaged(s, sphere).value,
                    electric_local_field_cc_averaged(s, sphere).value,
                ):
                    assert isinstance(value, float)
                    assert value >= 0


class TestDualitySwap:
    def test_each_correlator_maps_to_its_electric_counterpart(
        self, model, band, spheres
    ):
        # Evaluating the magnetic assembly on the swapped medium must
        # reproduce the independently coded electric-coupling assembly.
        from magpurcell import dual_medium

        for w in band[::11]:
            s = sample(model, float(w))
            d = dual_medium(s)
            for sphere in spheres:
                np.testing.assert_allclose(
                    hh_cc_averaged(d, sphere).value,
                    ee_cc_averaged(s, sphere).value,
                    rtol=1e-12,
                )
                np.testing.assert_allclose(
                    h_mnoise_cross_cc(d, sphere, NoiseConvention.H).value,
                    e_pnoise_cross_cc(s, sphere).value,
                    rtol=1e-12,
                )
                np.testing.assert_allclose(
                    local_field_cc_averaged(d, sphere).value,
                    electric_local_field_cc_averaged(s, sphere).value,
                    rtol=1e-12,
                )
        s = sample(model, 1.0)
        np.testing.assert_allclose(
            noise_magnetisation_cc(dual_medium(s), NoiseConvention.H).value,
            noise_polarisation_cc(s).value,
            rtol=1e-14,
        )


class TestAutoCorrelatorPositivity:
    def test_real_and_nonnegative_across_band(self, model, band, spheres):
        for w in band[::5]:
            s = sample(model, float(w))
            values = [
                noise_polarisation_cc(s).value,
                noise_magnetisation_cc(s, NoiseConvention.H).value,
                noise_magnetisation_cc(s, NoiseConvention.B).value,
            ]
            for sphere in spheres:
                values += [
                    hh_cc_averaged(s, sphere).value,
                    ee_cc_averaged(s, sphere).value,
                    bb_cc_averaged(s, sphere, NoiseConvention.H).value,
                    local_field_cc_averaged(s, sphere, NoiseConvention.B).value,
                    electric_local_field_cc_averaged(s, sphere).value,
                ]
            for value in values:
                assert isinstance(value, float)
                assert value >= 0


class TestPolaritonMap:
    def test_example_h_convention(self, ref_sample):
        m = polariton_map(ref_sample, NoiseConvention.H)
        np.testing.assert_allclose(m[0, 0], 1j * math.sqrt(1.25 / math.pi), rtol=1e-14)
        np.testing.assert_allclose(
            m[1, 1], 1j * math.sqrt(ref_sample.mu.imag / math.pi), rtol=1e-14
        )
        assert m[0, 1] == m[1, 0] == 0.0

    def test_vacuum_is_zero(self, vacuum):
        s = sample(vacuum, 1.0)
        for conv in CONVENTIONS:
            assert not polariton_map(s, conv).any()

    def test_b_convention_phases_share_modulus(self, model, band):
        for w in band[::11]:
            s = sample(model, float(w))
            conventional = polariton_map(
                s, NoiseConvention.B, PhaseConvention.CONVENTIONAL
            )[1, 1]
            dual_sym = polariton_map(
                s, NoiseConvention.B, PhaseConvention.DUAL_SYMMETRIC
            )[1, 1]
            np.testing.assert_allclose(abs(conventional), abs(dual_sym), rtol=1e-14)


oscillators = st.builds(
    LorentzOscillator,
    omega_L=st.floats(0.01, 3.0),
    omega_T=st.floats(0.05, 3.0),
    gamma=st.floats(0.005, 1.0),
)


def _map_matches_densities(s):
    # |map entry|^2 must equal the corresponding noise density for every
    # convention and phase: the spectra are invariant under the phase
    # choice that distinguishes the map variants.
    for conv in CONVENTIONS:
        for phase in PhaseConvention:
            mat = polariton_map(s, conv, phase)
            np.testing.assert_allclose(
                abs(mat[0, 0]) ** 2, noise_polarisation_cc(s).value, rtol=1e-12
            )
            np.testing.assert_allclose(
                abs(mat[1, 1]) ** 2,
                noise_magnetisation_cc(s, conv).value,
                rtol=1e-12,
            )


@settings(max_examples=100, deadline=None)
@given(e=oscillators, m=oscillators, omega=st.floats(0.01, 4.0))
def test_map_induces_fluctuation_dissipation_densities(e, m, omega):
    _map_matches_densities(sample(MediumModel(electric=(e,), magnetic=(m,)), omega))


def test_map_phase_invariance_thousand_random_samples(rng):
    for _ in range(1000):
        model = MediumModel(
            electric=(
                LorentzOscillator(
                    omega_L=rng.uniform(0.05, 2.0),
                    omega_T=rng.uniform(0.1, 2.0),
                    gamma=rng.uniform(0.01, 1.0),
                ),
            ),
            magnetic=(
                LorentzOscillator(
                    omega_L=rng.uniform(0.05, 2.0),
                    omega_T=rng.uniform(0.1, 2.0),
                    gamma=rng.uniform(0.01, 1.0),
                ),
            ),
        )
        _map_matches_densities(sample(model, float(rng.uniform(0.01, 3.0))))
