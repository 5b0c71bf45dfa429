import numpy as np
import pytest

from fda_secrecy import (
    AllocationScheme,
    AnVector,
    LinkParams,
    draw_allocation,
    make_artificial_noise,
    received_symbols,
    sinr_eve,
    snr_bob,
    steering_vector,
)
from fda_secrecy import Location
from fda_secrecy._rng import ARTIFICIAL_NOISE, RECEIVER_NOISE, substream

QPSK = np.array([1 + 1j, 1 - 1j, -1 + 1j, -1 - 1j]) / np.sqrt(2)


class TestLinkParams:
    def test_invariants(self):
        with pytest.raises(ValueError):
            LinkParams(alpha=-0.1, mu_b=1.0)
        with pytest.raises(ValueError):
            LinkParams(alpha=1.1, mu_b=1.0)
        with pytest.raises(ValueError):
            LinkParams(alpha=0.5, mu_b=0.0)
        with pytest.raises(ValueError):
            LinkParams(alpha=0.5, mu_b=1.0, beta=0.0)

    def test_from_db(self):
        params = LinkParams.from_db(0.5, 15.0)
        assert params.mu_b == pytest.approx(31.622776601683793, rel=1e-12)


class TestArtificialNoise:
    def test_null_and_norm_across_schemes(self, array32, bob, all_schemes, rng):
        for scheme in all_schemes:
            alloc = draw_allocation(scheme, 32, rng)
            h_b = steering_vector(bob, array32, alloc)
            for _ in range(50):
                w = make_artificial_noise(h_b, rng)
                assert abs(np.vdot(h_b.entries, w.entries)) <= 1e-10
                assert abs(np.linalg.norm(w.entries) - 1.0) <= 1e-12

    def test_mean_projected_power_identity(self, array32, bob):
        # For a fixed lfda allocation: E_z[|h_E^H w|^2] = (1 - |rho|^2)/(N-1)
        alloc = draw_allocation(AllocationScheme.lfda(), 32, np.random.default_rng(0))
        h_b = steering_vector(bob, array32, alloc)
        h_e = steering_vector(Location.from_degrees(52.0, 204.0), array32, alloc)
        rho_sq = abs(np.vdot(h_e.entries, h_b.entries)) ** 2
        expected = (1.0 - rho_sq) / 31.0
        an_rng = substream(17, ARTIFICIAL_NOISE, 0)
        gains = np.array(
            [abs(np.vdot(h_e.entries, make_artificial_noise(h_b, an_rng).entries)) ** 2 for _ in range(10_000)]
        )
        stderr = gains.std(ddof=1) / np.sqrt(gains.size)
        assert abs(gains.mean() - expected) <= 3 * stderr

    def test_an_vector_validates_norm(self):
        with pytest.raises(ValueError):
            AnVector(np.ones(4, dtype=complex))


class TestSnrBob:
    def test_zero_alpha(self):
        assert snr_bob(LinkParams(0.0, 12.0)) == 0.0

    def test_full_power(self):
        assert snr_bob(LinkParams(1.0, 31.6228)) == 31.6228

    def test_half_power(self):
        assert snr_bob(LinkParams(0.5, 31.6228)) == pytest.approx(15.8114, abs=1e-12)


class TestSinrEve:
    def test_colocated_eve(self, array32, bob, rng):
        alloc = draw_allocation(AllocationScheme.rfda_cont(10.0), 32, rng)
        h_b = steering_vector(bob, array32, alloc)
        w = make_artificial_noise(h_b, rng)
        params = LinkParams(0.4, 20.0, beta=2.0)
        # h_E = h_B: the AN term vanishes by orthogonality, |rho| = 1
        assert sinr_eve(h_b, h_b, w, params) == pytest.approx(0.4 * 20.0 / 2.0, rel=1e-12)

    def test_zero_alpha(self, array32, bob, eve, rng):
        alloc = draw_allocation(AllocationScheme.rfda_cont(10.0), 32, rng)
        h_b = steering_vector(bob, array32, alloc)
        h_e = steering_vector(eve, array32, alloc)
        w = make_artificial_noise(h_b, rng)
        assert sinr_eve(h_e, h_b, w, LinkParams(0.0, 20.0)) == 0.0

    def test_pa_codirectional_eve_matches_bob(self, array32, bob, eve, rng):
        # PA, theta_E = theta_B, beta = 1: gamma_E = gamma_B (zero secrecy)
        alloc = draw_allocation(AllocationScheme.pa(), 32, rng)
        h_b = steering_vector(bob, array32, alloc)
        h_e = steering_vector(eve, array32, alloc)
        w = make_artificial_noise(h_b, rng)
        params = LinkParams(0.5, 31.622776601683793, beta=1.0)
        assert sinr_eve(h_e, h_b, w, params) == pytest.approx(snr_bob(params), rel=1e-12)

    def test_noise_convention_scale_invariance(self, array32, bob, eve, rng):
        # Only the ratios mu_b and beta matter: recomputing the SINR with an
        # explicit sigma_B^2 != 1 convention gives the same value.
        alloc = draw_allocation(AllocationScheme.rfda_cont(10.0), 32, rng)
        h_b = steering_vector(bob, array32, alloc)
        h_e = steering_vector(eve, array32, alloc)
        w = make_artificial_noise(h_b, rng)
        params = LinkParams(0.6, 25.0, beta=1.7)
        got = sinr_eve(h_e, h_b, w, params)
        for sigma_b_sq in (0.25, 4.0):
            p_s = params.mu_b * sigma_b_sq
            sigma_e_sq = params.beta * sigma_b_sq
            rho_sq = abs(np.vdot(h_e.entries, h_b.entries)) ** 2
            an_sq = abs(np.vdot(h_e.entries, w.entries)) ** 2
            manual = params.alpha * p_s * rho_sq / ((1 - params.alpha) * p_s * an_sq + sigma_e_sq)
            assert manual == pytest.approx(got, rel=1e-12)

    def test_monotone_in_alpha(self, array32, bob, eve, rng):
        alloc = draw_allocation(AllocationScheme.rfda_cont(10.0), 32, rng)
        h_b = steering_vector(bob, array32, alloc)
        h_e = steering_vector(eve, array32, alloc)
        w = make_artificial_noise(h_b, rng)
        values = [sinr_eve(h_e, h_b, w, LinkParams(a, 31.6, beta=1.0)) for a in np.linspace(0, 1, 21)]
        assert np.all(np.diff(values) >= -1e-15)


class TestReceivedSymbols:
    def test_bob_noiseless_full_power_reduction(self, array32, bob, rng):
        alloc = draw_allocation(AllocationScheme.rfda_cont(10.0), 32, rng)
        h_b = steering_vector(bob, array32, alloc)
        params = LinkParams(1.0, 31.622776601683793)
        out = received_symbols(QPSK, bob, h_b, array32, alloc, params, rng, side="bob", include_noise=False)
        assert np.allclose(out, np.sqrt(params.mu_b) * QPSK, atol=1e-10)

    def test_an_nulled_at_bob_any_alpha(self, array32, bob, rng):
        alloc = draw_allocation(AllocationScheme.rfda_disc(10), 32, rng)
        h_b = steering_vector(bob, array32, alloc)
        params = LinkParams(0.3, 31.622776601683793)
        out = received_symbols(QPSK, bob, h_b, array32, alloc, params, rng, side="bob", include_noise=False)
        assert np.allclose(out, np.sqrt(0.3 * params.mu_b) * QPSK, atol=1e-10)

    def test_eve_interference_moment(self, array32, bob, eve):
        # AN + noise residual variance matches (1-alpha) mu_b E|h_E^H w|^2 + beta
        alloc = draw_allocation(AllocationScheme.rfda_cont(10.0), 32, np.random.default_rng(4))
        h_b = steering_vector(bob, array32, alloc)
        h_e = steering_vector(eve, array32, alloc)
        params = LinkParams(0.5, 31.622776601683793, beta=1.0)
        rng = substream(3, RECEIVER_NOISE, 0)
        n_samples = 1000
        symbols = np.tile(QPSK, n_samples // 4)
        out = received_symbols(symbols, eve, h_b, array32, alloc, params, rng, side="eve")
        gain = np.vdot(h_e.entries, h_b.entries)
        residual = out - np.sqrt(params.alpha * params.mu_b) * gain * symbols
        power = np.abs(residual) ** 2
        rho_sq = abs(gain) ** 2
        expected = (1 - params.alpha) * params.mu_b * (1 - rho_sq) / 31.0 + params.beta
        stderr = power.std(ddof=1) / np.sqrt(n_samples)
        assert abs(power.mean() - expected) <= 3 * stderr

    def test_empty_sequence(self, array32, bob, rng):
        alloc = draw_allocation(AllocationScheme.pa(), 32, rng)
        h_b = steering_vector(bob, array32, alloc)
        out = received_symbols([], bob, h_b, array32, alloc, LinkParams(0.5, 2.0), rng)
        assert out.size == 0

    def test_fixed_an_mode_reuses_vector(self, array32, bob, eve, rng):
        alloc = draw_allocation(AllocationScheme.rfda_cont(10.0), 32, rng)
        h_b = steering_vector(bob, array32, alloc)
        w = make_artificial_noise(h_b, rng)
        params = LinkParams(0.5, 10.0)
        out = received_symbols(
            np.ones(8, dtype=complex), eve, h_b, array32, alloc, params, rng,
            side="eve", fixed_an=w, include_noise=False,
        )
        assert np.allclose(out, out[0], atol=1e-14)

    def test_warns_on_non_unit_power(self, array32, bob, rng):
        alloc = draw_allocation(AllocationScheme.pa(), 32, rng)
        h_b = steering_vector(bob, array32, alloc)
        with pytest.warns(UserWarning):
            received_symbols(3.0 * QPSK, bob, h_b, array32, alloc, LinkParams(0.5, 2.0), rng)

    def test_rejects_bad_side(self, array32, bob, rng):
        alloc = draw_allocation(AllocationScheme.pa(), 32, rng)
        h_b = steering_vector(bob, array32, alloc)
        with pytest.raises(ValueError):
            received_symbols(QPSK, bob, h_b, array32, alloc, LinkParams(0.5, 2.0), rng, side="mallory")
