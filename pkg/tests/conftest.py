import numpy as np
import pytest

from magpurcell import AveragingSphere, MediumModel, example_medium, sample
from magpurcell.units import convert_radius

REFERENCE_TARGETS = (0.01, 0.03, 0.1)
REFERENCE_WAVELENGTH_NM = 100.0


@pytest.fixture(scope="session")
def model():
    """The bundled example medium."""
    return example_medium()


@pytest.fixture(scope="session")
def vacuum():
    return MediumModel.vacuum()


@pytest.fixture(scope="session")
def ref_sample(model):
    """Example medium at the reference frequency."""
    return sample(model, 1.0)


@pytest.fixture(scope="session")
def spheres(ref_sample):
    """The three averaging spheres used in the figures, smallest first."""
    return [
        AveragingSphere(convert_radius(t, ref_sample, REFERENCE_WAVELENGTH_NM).R)
        for t in REFERENCE_TARGETS
    ]


@pytest.fixture(scope="session")
def band():
    """300-point frequency grid spanning the example medium's band."""
    return np.linspace(0.05, 1.5, 300)


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
