import cmath
import math

import numpy as np
import pytest

import oracles
from fqwell import (
    DimensionlessWell,
    DomainError,
    StationaryPhase,
    WellParameters,
    energy_of_sigma,
    k_of_energy,
    kappa_of_energy,
    nondimensionalize,
    pow_alpha,
    root_alpha,
    stationary_phase,
)


def well(alpha=2.0, a=1.0, depth=16.0, d_alpha=1.0, hbar=1.0):
    return WellParameters(a=a, depth=depth, d_alpha=d_alpha, hbar=hbar, alpha=alpha)


class TestValidation:
    @pytest.mark.parametrize("alpha", [1.0, 0.5, 2.0 + 1e-12, 3.0, -1.0, math.nan, math.inf])
    def test_alpha_out_of_range_rejected(self, alpha):
        with pytest.raises(DomainError):
            well(alpha=alpha)
        with pytest.raises(DomainError):
            DimensionlessWell(g=1.0, alpha=alpha)

    def test_alpha_interval_is_closed_at_two(self):
        assert well(alpha=2.0).alpha == 2.0
        assert well(alpha=1.0 + 1e-9).alpha == 1.0 + 1e-9

    @pytest.mark.parametrize("field", ["a", "depth", "d_alpha", "hbar"])
    @pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
    def test_positive_finite_fields(self, field, bad):
        with pytest.raises(DomainError, match=field):
            well(**{field: bad})

    @pytest.mark.parametrize("bad", [0.0, -2.0, math.nan, math.inf])
    def test_dimensionless_g(self, bad):
        with pytest.raises(DomainError):
            DimensionlessWell(g=bad, alpha=1.5)

    def test_fractional_power_helpers(self):
        assert pow_alpha(0.0, 1.7) == 0.0
        assert root_alpha(0.0, 1.7) == 0.0
        assert root_alpha(8.0, 1.5) == pytest.approx(4.0, rel=1e-15)
        with pytest.raises(DomainError):
            pow_alpha(-1.0, 1.5)
        with pytest.raises(DomainError):
            root_alpha(-1e-300, 1.5)


class TestDispersion:
    def test_kappa_matches_textbook_alpha2(self):
        m = 0.8
        p = well(alpha=2.0, depth=5.0, d_alpha=1.0 / (2.0 * m))
        for e in np.linspace(0.0, 5.0, 31)[:-1]:
            assert kappa_of_energy(p, float(e)) == pytest.approx(
                oracles.kappa_textbook(m, 5.0, float(e), 1.0), rel=1e-14
            )

    def test_k_matches_textbook_alpha2(self):
        m = 0.8
        p = well(alpha=2.0, depth=5.0, d_alpha=1.0 / (2.0 * m))
        for e in np.linspace(0.0, 12.0, 31):
            assert k_of_energy(p, float(e)) == pytest.approx(
                oracles.k_textbook(m, float(e), 1.0), rel=1e-14
            )

    def test_kappa_at_zero_energy(self):
        p = well(alpha=1.5, depth=3.0, d_alpha=2.0, hbar=0.5)
        assert kappa_of_energy(p, 0.0) == pytest.approx(
            (3.0 / 2.0) ** (1 / 1.5) / 0.5, rel=1e-15
        )

    def test_unit_value_identities(self):
        p = well(alpha=1.5, depth=2.0)
        assert kappa_of_energy(p, 1.0) == pytest.approx(1.0, rel=1e-15)
        assert k_of_energy(p, 8.0) == pytest.approx(4.0, rel=1e-15)
        assert k_of_energy(p, 0.0) == 0.0

    def test_domain_errors(self):
        p = well(depth=2.0)
        with pytest.raises(DomainError):
            kappa_of_energy(p, 2.0)
        with pytest.raises(DomainError):
            kappa_of_energy(p, -0.1)
        with pytest.raises(DomainError):
            k_of_energy(p, -1e-12)

    @pytest.mark.parametrize("alpha", [1.1, 1.5, 1.9, 2.0])
    def test_monotone_dispersion(self, alpha):
        p = well(alpha=alpha, depth=7.0)
        es = np.linspace(0.0, 7.0, 101)[:-1]
        ks = np.array([k_of_energy(p, float(e)) for e in es])
        kaps = np.array([kappa_of_energy(p, float(e)) for e in es])
        assert np.all(np.diff(ks) > 0.0)
        assert np.all(np.diff(kaps) < 0.0)

    @pytest.mark.parametrize("alpha", [1.1, 1.5, 1.9, 2.0])
    def test_kinetic_consistency(self, alpha):
        p = well(alpha=alpha, depth=7.0, d_alpha=1.7, hbar=0.9)
        rng = np.random.default_rng(7)
        for e in rng.uniform(1e-6, 7.0 - 1e-6, 25):
            k = k_of_energy(p, float(e))
            kap = kappa_of_energy(p, float(e))
            total = (
                pow_alpha(p.hbar * k, alpha) + pow_alpha(p.hbar * kap, alpha)
            ) * p.d_alpha
            assert total == pytest.approx(7.0, rel=1e-12)

    @pytest.mark.parametrize("alpha", [1.2, 1.5, 2.0])
    def test_dimensionless_closure(self, alpha):
        p = well(alpha=alpha, a=1.3, depth=4.0, d_alpha=0.8, hbar=1.1)
        w = nondimensionalize(p)
        for frac in np.linspace(0.05, 0.95, 10):
            sigma = float(frac * w.sigma_max)
            e = energy_of_sigma(p, sigma)
            lhs = kappa_of_energy(p, e) * p.a
            rhs = (w.g - sigma**alpha) ** (1.0 / alpha)
            assert lhs == pytest.approx(rhs, rel=1e-12)


class TestEnergyOfSigma:
    def test_zero(self):
        assert energy_of_sigma(well(), 0.0) == 0.0
        assert energy_of_sigma(DimensionlessWell(g=3.0, alpha=1.5), 0.0) == 0.0

    def test_threshold_hits_depth(self):
        # sigma_max**alpha round-trips exactly for this well, so E == U.
        w = DimensionlessWell(g=16.0, alpha=2.0)
        assert energy_of_sigma(w, w.sigma_max) == 1.0
        p = well(alpha=2.0, depth=16.0)
        assert energy_of_sigma(p, 4.0) == 16.0

    def test_direct_substitution(self):
        p = well(alpha=2.0, depth=100.0, d_alpha=0.5)
        assert energy_of_sigma(p, math.pi / 2) == pytest.approx(
            math.pi**2 / 8.0, rel=1e-15
        )

    def test_dimensionless_fraction(self):
        w = DimensionlessWell(g=5.0, alpha=1.5)
        assert energy_of_sigma(w, 1.0) == pytest.approx(0.2, rel=1e-15)

    def test_negative_sigma_rejected(self):
        with pytest.raises(DomainError):
            energy_of_sigma(well(), -0.5)


class TestNondimensionalize:
    def test_direct(self):
        # m = 1/2 makes d_2 = 1, so G = a^2 U.
        w = nondimensionalize(well(alpha=2.0, depth=16.0))
        assert w.g == 16.0
        assert w.sigma_max == 4.0
        assert nondimensionalize(well(alpha=1.5, depth=5.0)).g == 5.0

    def test_scaling_identity(self):
        alpha = 1.7
        base = well(alpha=alpha, a=1.0, depth=3.0)
        scaled = well(alpha=alpha, a=2.0, depth=3.0 / 2.0**alpha)
        assert nondimensionalize(scaled).g == pytest.approx(
            nondimensionalize(base).g, rel=1e-14
        )

    def test_overflow(self):
        with pytest.raises(OverflowError):
            nondimensionalize(well(alpha=2.0, a=1e200, depth=1e200))


class TestStationaryPhase:
    def test_zero_time(self):
        assert stationary_phase(StationaryPhase(energy=3.0, time=0.0), hbar=1.0) == 1.0

    def test_half_turn(self):
        z = stationary_phase(StationaryPhase(energy=math.pi, time=1.0), hbar=1.0)
        assert z == pytest.approx(-1.0, abs=1e-15)

    def test_quarter_turn(self):
        z = stationary_phase(StationaryPhase(energy=math.pi / 2, time=1.0), hbar=1.0)
        assert z == pytest.approx(-1j, abs=1e-15)

    def test_unit_modulus(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            s = StationaryPhase(energy=float(rng.uniform(0, 50)), time=float(rng.uniform(-9, 9)))
            assert abs(stationary_phase(s, hbar=0.7)) == pytest.approx(1.0, abs=4e-16)


def test_round_trip_physical_vs_dimensionless():
    import fqwell

    p = well(alpha=1.6, a=0.9, depth=11.0, d_alpha=1.4, hbar=0.8)
    w = nondimensionalize(p)
    phys = fqwell.solve_spectrum(p)
    dimless = fqwell.solve_spectrum(w)
    assert len(phys.levels) == len(dimless.levels)
    for lp, ld in zip(phys.levels, dimless.levels):
        assert lp.sigma == ld.sigma
        assert lp.eta == ld.eta
        assert ld.energy is None
        assert 0.0 < lp.energy < p.depth
