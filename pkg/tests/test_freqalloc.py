import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fda_secrecy import AllocationScheme, FrequencyAllocation, SchemeKind, dirichlet_kernel, draw_allocation, mgf_on_imaginary_axis
from fda_secrecy._rng import ALLOCATION, ARTIFICIAL_NOISE, substream
from fda_secrecy.freqalloc import draw_multipliers


class TestSchemeValidation:
    def test_rfda_requires_m(self):
        with pytest.raises(ValueError):
            AllocationScheme(SchemeKind.RFDA_CONT)
        with pytest.raises(ValueError):
            AllocationScheme(SchemeKind.RFDA_DISC)

    def test_disc_m_must_be_integer_at_least_two(self):
        with pytest.raises(ValueError):
            AllocationScheme.rfda_disc(1)
        with pytest.raises(ValueError):
            AllocationScheme(SchemeKind.RFDA_DISC, 2.5)
        AllocationScheme.rfda_disc(2)

    def test_cont_m_any_positive(self):
        AllocationScheme.rfda_cont(0.5)
        with pytest.raises(ValueError):
            AllocationScheme.rfda_cont(-1.0)

    def test_deterministic_kinds_reject_m(self):
        with pytest.raises(ValueError):
            AllocationScheme(SchemeKind.PA, 10.0)

    def test_kind_names_roundtrip(self):
        for name in ("pa", "lfda", "rfda-cont", "rfda-disc"):
            assert SchemeKind.from_name(name).value == name
        with pytest.raises(ValueError):
            SchemeKind.from_name("gaussian")


class TestDrawAllocation:
    def test_pa_all_zeros(self, rng):
        alloc = draw_allocation(AllocationScheme.pa(), 4, rng)
        assert np.array_equal(alloc.values, [0.0, 0.0, 0.0, 0.0])

    def test_lfda_is_offset_ramp(self, rng):
        alloc = draw_allocation(AllocationScheme.lfda(), 4, rng)
        assert np.array_equal(alloc.values, [-1.5, -0.5, 0.5, 1.5])

    def test_deterministic_schemes_consume_nothing(self):
        rng1 = np.random.default_rng(1)
        rng2 = np.random.default_rng(1)
        draw_allocation(AllocationScheme.pa(), 8, rng1)
        draw_allocation(AllocationScheme.lfda(), 8, rng1)
        assert rng1.random() == rng2.random()

    def test_disc_lattice_frequencies(self):
        # 1e5 draws at M=10: each lattice point within 3 standard errors of 1/10
        vals = draw_allocation(AllocationScheme.rfda_disc(10), 100_000, substream(99, ALLOCATION, 0)).values
        lattice = np.arange(10) - 4.5
        stderr = np.sqrt(0.1 * 0.9 / 100_000)
        for point in lattice:
            freq = np.mean(vals == point)
            assert abs(freq - 0.1) <= 3 * stderr
        assert set(np.unique(vals)) <= set(lattice)

    def test_cont_support(self):
        vals = draw_allocation(AllocationScheme.rfda_cont(7.0), 50_000, substream(7, ALLOCATION, 0)).values
        assert vals.min() >= -3.5 and vals.max() <= 3.5
        # roughly uniform: mean near 0, variance near M^2/12
        assert abs(vals.mean()) < 0.05
        assert abs(vals.var() - 49.0 / 12.0) < 0.1

    def test_reproducible_given_seed(self):
        a = draw_allocation(AllocationScheme.rfda_cont(10.0), 16, substream(5, ALLOCATION, 3)).values
        b = draw_allocation(AllocationScheme.rfda_cont(10.0), 16, substream(5, ALLOCATION, 3)).values
        c = draw_allocation(AllocationScheme.rfda_cont(10.0), 16, substream(5, ALLOCATION, 4)).values
        assert np.array_equal(a, b)
        assert not np.array_equal(a, c)

    def test_values_must_lie_in_support(self):
        with pytest.raises(ValueError):
            FrequencyAllocation(AllocationScheme.rfda_cont(2.0), np.array([0.0, 3.0]))

    @settings(max_examples=25, deadline=None)
    @given(m=st.integers(2, 40), seed=st.integers(0, 2**31))
    def test_disc_draws_in_lattice(self, m, seed):
        vals = draw_allocation(AllocationScheme.rfda_disc(m), 64, np.random.default_rng(seed)).values
        shifted = vals + (m - 1) / 2
        assert np.all(shifted == np.round(shifted))
        assert vals.min() >= -(m - 1) / 2 and vals.max() <= (m - 1) / 2


class TestMgf:
    def test_value_one_at_origin(self, all_schemes):
        for scheme in all_schemes:
            if scheme.kind is SchemeKind.LFDA:
                continue
            assert mgf_on_imaginary_axis(scheme, 0.0) == 1.0

    def test_pa_is_identically_one(self):
        p = np.linspace(-3, 3, 17)
        assert np.all(mgf_on_imaginary_axis(AllocationScheme.pa(), p) == 1.0)

    def test_cont_sinc_values(self):
        scheme = AllocationScheme.rfda_cont(10.0)
        assert mgf_on_imaginary_axis(scheme, 0.05) == pytest.approx(2.0 / np.pi, abs=1e-12)
        assert mgf_on_imaginary_axis(scheme, 1.19) == pytest.approx(-0.008265812126751898, abs=1e-12)

    def test_lfda_unsupported(self):
        with pytest.raises(ValueError):
            mgf_on_imaginary_axis(AllocationScheme.lfda(), 0.3)

    def test_bounded_by_one(self):
        p = np.linspace(-4, 4, 4001)
        for scheme in (AllocationScheme.rfda_cont(10.0), AllocationScheme.rfda_disc(10)):
            assert np.all(np.abs(mgf_on_imaginary_axis(scheme, p)) <= 1.0 + 1e-12)

    def test_disc_periodicity_sign(self):
        p = np.linspace(-1.3, 1.7, 101)
        for m in (2, 3, 10):
            scheme = AllocationScheme.rfda_disc(m)
            lhs = mgf_on_imaginary_axis(scheme, p + 1.0)
            rhs = (-1.0) ** (m - 1) * mgf_on_imaginary_axis(scheme, p)
            assert np.allclose(lhs, rhs, atol=1e-10)

    @pytest.mark.parametrize("kind,m", [("rfda-cont", 10.0), ("rfda-disc", 10)])
    def test_monte_carlo_consistency(self, kind, m):
        # empirical mean of exp(-j*2*pi*k*p) over 1e6 draws vs Phi, 4 stderr
        scheme = (
            AllocationScheme.rfda_cont(m) if kind == "rfda-cont" else AllocationScheme.rfda_disc(int(m))
        )
        k = draw_multipliers(scheme, (1_000_000,), substream(2024, ALLOCATION, 1))
        for p in (0.1, 0.5, 1.19):
            samples = np.exp(-2j * np.pi * k * p)
            emp = samples.mean()
            stderr_re = samples.real.std(ddof=1) / 1000.0
            stderr_im = samples.imag.std(ddof=1) / 1000.0
            phi = mgf_on_imaginary_axis(scheme, p)
            assert abs(emp.real - phi) <= 4 * stderr_re
            assert abs(emp.imag) <= max(4 * stderr_im, 1e-12)


class TestDirichletKernel:
    def test_origin_limit(self):
        for n in (1, 4, 32):
            assert dirichlet_kernel(0.0, n) == float(n)

    def test_integer_limit_matches_lhopital_neighborhood(self):
        # l'Hopital limit at x=1 for N=4 is -4; confirm by approaching the pole
        assert dirichlet_kernel(1.0, 4) == -4.0
        for dx in (1e-6, -1e-6):
            approached = np.sin(4 * np.pi * (1 + dx)) / np.sin(np.pi * (1 + dx))
            assert approached == pytest.approx(-4.0, abs=1e-4)

    def test_interior_zero(self):
        assert dirichlet_kernel(0.25, 4) == pytest.approx(0.0, abs=1e-12)

    def test_bounded_by_n(self):
        x = np.linspace(-3.5, 3.5, 7001)
        for n in (2, 5, 16):
            assert np.all(np.abs(dirichlet_kernel(x, n)) <= n + 1e-9)

    @pytest.mark.parametrize("n", [2, 4, 16, 101, 1024])
    def test_continuity_across_integer_poles(self, n):
        for m in range(-3, 4):
            center = dirichlet_kernel(float(m), n)
            assert center == pytest.approx(n * (-1.0) ** ((n - 1) * m), abs=1e-9)
            for dx in (1e-9, -1e-9):
                assert abs(dirichlet_kernel(m + dx, n) - center) <= 1e-4 * n

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            dirichlet_kernel(0.3, 0)


class TestSubstreams:
    def test_purposes_are_disjoint(self):
        a = substream(11, ALLOCATION, 0).random(4)
        b = substream(11, ARTIFICIAL_NOISE, 0).random(4)
        assert not np.array_equal(a, b)

    def test_context_extends_address(self):
        a = substream(11, ALLOCATION, 0).random(4)
        b = substream(11, ALLOCATION, 1).random(4)
        assert not np.array_equal(a, b)
