import numpy as np
import pytest

from fda_secrecy import AllocationScheme, ArrayConfig, LinkParams, Location


@pytest.fixture
def array32():
    """Default array: N=32, 1 GHz carrier, 3 MHz increment, half-wavelength spacing."""
    return ArrayConfig(n_elements=32, carrier_hz=1e9, increment_hz=3e6)


@pytest.fixture
def bob():
    return Location.from_degrees(45.0, 120.0)


@pytest.fixture
def eve():
    return Location.from_degrees(45.0, 239.0)


@pytest.fixture
def params_half():
    """alpha = 0.5 at mu_b = 15 dB, beta = 1."""
    return LinkParams.from_db(0.5, 15.0)


@pytest.fixture
def all_schemes():
    return [
        AllocationScheme.pa(),
        AllocationScheme.lfda(),
        AllocationScheme.rfda_cont(10.0),
        AllocationScheme.rfda_disc(10),
    ]


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
