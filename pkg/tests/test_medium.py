import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from magpurcell import (
    BranchAmbiguityWarning,
    LorentzOscillator,
    MediumModel,
    MediumSample,
    SingularMediumError,
    dual_medium,
    permeability,
    permittivity,
    refractive_index,
    sample,
)


def polar_sqrt(z: complex) -> complex:
    """Independent principal square root via explicit polar form."""
    r = abs(z)
    theta = math.atan2(z.imag, z.real)
    return math.sqrt(r) * cmath.exp(1j * theta / 2.0)


class TestPermittivity:
    def test_vacuum(self, vacuum):
        assert permittivity(vacuum, 0.7) == 1.0 + 0.0j

    def test_resonance_value(self, model):
        # At the electric resonance the real denominator vanishes and
        # eps = 1 + i omega_L^2 / (2 gamma omega_T).
        np.testing.assert_allclose(permittivity(model, 1.0), 1.0 + 1.25j, rtol=1e-14)

    def test_static_limit(self, model):
        # eps(0+) -> 1 + omega_L^2 / omega_T^2 = 1.25
        assert abs(permittivity(model, 1e-9) - 1.25) < 1e-6

    @pytest.mark.parametrize("omega", [0.0, -0.3])
    def test_rejects_nonpositive_frequency(self, model, omega):
        with pytest.raises(ValueError):
            permittivity(model, omega)


class TestPermeability:
    def test_vacuum(self, vacuum):
        assert permeability(vacuum, 2.2) == 1.0 + 0.0j

    def test_static_limit(self, model):
        # 1 + (1/8)^2 / (1/2)^2 = 1.0625
        assert abs(permeability(model, 1e-9) - 1.0625) < 1e-6

    def test_resonance_value(self, model):
        np.testing.assert_allclose(
            permeability(model, 0.5), 1.0 + 0.15625j, rtol=1e-14
        )


class TestRefractiveIndex:
    def test_vacuum(self):
        assert refractive_index(1.0, 1.0) == 1.0

    def test_polar_form_oracle(self, model):
        eps = permittivity(model, 1.0)
        mu = permeability(model, 1.0)
        n = refractive_index(eps, mu)
        np.testing.assert_allclose(n, polar_sqrt(eps * mu), rtol=1e-14)
        # Frozen value for the example medium at the reference frequency.
        assert abs(n - (1.1278 + 0.5457j)) < 1e-4

    def test_double_negative_warns_and_documents_branch(self):
        # eps*mu = +1 but both responses are negative real: the passive
        # rule cannot tell +1 from -1, so the call must not stay silent.
        with pytest.warns(BranchAmbiguityWarning):
            n = refractive_index(-1.0, -1.0)
        assert n == 1.0  # principal root, by documented convention

    def test_negative_real_product_warns(self):
        with pytest.warns(BranchAmbiguityWarning):
            n = refractive_index(-1.0, 1.0)
        assert n == 1j

    def test_singular_product(self):
        with pytest.raises(SingularMediumError):
            refractive_index(0.0, 1.0 + 1.0j)

    def test_no_warning_for_absorbing_media(self, model, band):
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("error", BranchAmbiguityWarning)
            for w in band[::13]:
                sample(model, float(w))


class TestSample:
    def test_vacuum(self, vacuum):
        s = sample(vacuum, 1.0)
        assert (s.eps, s.mu, s.n) == (1.0, 1.0, 1.0)

    def test_example_composition(self, ref_sample):
        np.testing.assert_allclose(ref_sample.eps, 1.0 + 1.25j, rtol=1e-14)
        np.testing.assert_allclose(
            ref_sample.mu, 0.98055 + 0.00519j, atol=1e-5
        )
        np.testing.assert_allclose(ref_sample.n, 1.1278 + 0.5457j, atol=1e-4)

    def test_magnetic_resonance_location(self, model):
        # Im(mu) is maximal within one grid step of the magnetic
        # resonance at omega = 0.5.
        grid = np.arange(0.3, 0.7001, 0.01)
        ims = [permeability(model, float(w)).imag for w in grid]
        peak = grid[int(np.argmax(ims))]
        assert abs(peak - 0.5) <= 0.01 + 1e-12

    def test_invariants_on_band(self, model, band):
        for w in band:
            s = sample(model, float(w))
            assert abs(s.n * s.n - s.eps * s.mu) <= 1e-14 * abs(s.eps * s.mu)
            assert s.n.imag >= 0
            assert s.eps.imag > 0
            assert s.mu.imag > 0
            assert s.is_passive

    def test_high_frequency_limits(self, model):
        assert abs(permittivity(model, 1e3) - 1.0) < 1e-4
        assert abs(permeability(model, 1e3) - 1.0) < 1e-4

    def test_sample_validation(self):
        with pytest.raises(ValueError):
            MediumSample(omega=1.0, eps=1.0, mu=1.0, n=2.0)  # n^2 != eps*mu
        with pytest.raises(ValueError):
            MediumSample(omega=1.0, eps=1.0, mu=1.0, n=-1.0 - 0.5j)
        with pytest.raises(ValueError):
            MediumSample(omega=0.0, eps=1.0, mu=1.0, n=1.0)


class TestDualMedium:
    def test_definition(self):
        s = MediumSample(omega=1.0, eps=2.0 + 1.0j, mu=1.0, n=polar_sqrt(2.0 + 1.0j))
        d = dual_medium(s)
        assert (d.eps, d.mu, d.n) == (s.mu, s.eps, s.n)

    def test_involution(self, model, band):
        for w in band[::17]:
            s = sample(model, float(w))
            assert dual_medium(dual_medium(s)) == s

    def test_example_at_reference(self, ref_sample):
        d = dual_medium(ref_sample)
        np.testing.assert_allclose(d.eps, 0.98055 + 0.00519j, atol=1e-5)
        np.testing.assert_allclose(d.mu, 1.0 + 1.25j, rtol=1e-14)
        assert d.n == ref_sample.n


class TestOscillatorValidation:
    def test_gamma_must_be_positive(self):
        with pytest.raises(ValueError):
            LorentzOscillator(omega_L=0.5, omega_T=1.0, gamma=0.0)

    def test_omega_t_must_be_positive(self):
        with pytest.raises(ValueError):
            LorentzOscillator(omega_L=0.5, omega_T=0.0, gamma=0.1)

    def test_negative_coupling_rejected(self):
        with pytest.raises(ValueError):
            LorentzOscillator(omega_L=-0.1, omega_T=1.0, gamma=0.1)


oscillators = st.builds(
    LorentzOscillator,
    omega_L=st.floats(0.01, 3.0),
    omega_T=st.floats(0.05, 3.0),
    gamma=st.floats(0.005, 1.0),
)


@settings(max_examples=80, deadline=None)
@given(e=oscillators, m=oscillators, omega=st.floats(0.01, 5.0))
def test_passivity_and_branch_properties(e, m, omega):
    model = MediumModel(electric=(e,), magnetic=(m,))
    s = sample(model, omega)
    assert s.eps.imag > 0
    assert s.mu.imag > 0
    assert s.n.imag >= 0
    assert abs(s.n * s.n - s.eps * s.mu) <= 1e-14 * abs(s.eps * s.mu)
    assert dual_medium(dual_medium(s)) == s


@settings(max_examples=40, deadline=None)
@given(
    oscs=st.lists(oscillators, min_size=2, max_size=4),
    omega=st.floats(0.05, 4.0),
)
def test_multiple_oscillators_sum(oscs, omega):
    model = MediumModel(electric=tuple(oscs))
    expected = 1 + sum(o.susceptibility(omega) for o in oscs)
    np.testing.assert_allclose(permittivity(model, omega), expected, rtol=1e-14)
