import math

import pytest

from zpfcross.constants import CosmologyContext
from zpfcross.errors import (
    InvalidBracket,
    KappaOutOfRange,
    NoCrossing,
    SlopeOutOfRange,
    ValidationError,
)
from zpfcross.quantity import Quantity, SPECTRAL_DENSITY, WAVENUMBER
from zpfcross.spectra import Boyer, PowerLawTurbulence, TruncatedBoyer
from zpfcross.transition import (
    TransitionResult,
    kolmogorov_reference_scale,
    log_form_constants,
    log_form_scale,
    monte_carlo_scale,
    numeric_crossover,
    sigma_approximation,
    transition_scale,
)

C, G, HBAR, H = 2.99792458e8, 6.67428e-11, 1.054571628e-34, 2.49e-18
E_G, E_C, E_HBAR, E_H = 1e-4, 0.0, 5e-5, 0.15


def rel(x, y):
    return abs(x - y) / abs(y)


def lambda0_oracle(a, kappa):
    # plain-float evaluation of the closed form, independent of the
    # quantity machinery
    inner = (8.0 * math.pi * G * HBAR / (3.0 * (a - 1.0) * kappa * C ** 2 * H)
             * (C / H) ** a)
    return 2.0 * math.pi * inner ** (1.0 / (3.0 + a))


def rel_sigma_oracle(a, e_kappa=0.0):
    return math.sqrt(E_G ** 2 + (a - 2.0) ** 2 * E_C ** 2 + E_HBAR ** 2
                     + (a + 1.0) ** 2 * E_H ** 2 + e_kappa ** 2) / (3.0 + a)


class TestClosedForm:
    def test_matches_float_oracle(self, ctx):
        for a in (1.3, 1.7, 5.0 / 3.0, 1.8, 2.0, 2.5):
            for kappa in (1.0, 1e-5, 1e-17):
                result = transition_scale(a, kappa, ctx)
                assert rel(result.lambda0.value, lambda0_oracle(a, kappa)) < 1e-12
                assert rel(result.rel_sigma, rel_sigma_oracle(a)) < 1e-12

    def test_published_values(self, ctx):
        r = transition_scale(1.7, 1.0, ctx)
        assert rel(r.lambda0.value, 16.0) < 0.02
        r = transition_scale(2.0, 1e-5, ctx)
        assert rel(r.lambda0.value, 5172.0) < 0.02
        assert rel(r.sigma.value, 465.0) < 0.10

    def test_kolmogorov_slope_value(self, ctx):
        # frozen from the float oracle at a = 5/3, kappa = 1
        result = transition_scale(5.0 / 3.0, 1.0, ctx)
        assert rel(result.lambda0.value, 10.624246) < 1e-6

    def test_lambda0_is_exactly_2pi_over_k0(self, ctx):
        r = transition_scale(1.8, 1e-5, ctx)
        assert r.lambda0.value == 2.0 * math.pi / r.k0.value

    def test_breakdown_sums_to_rel_sigma(self, ctx):
        r = transition_scale(1.7, 1e-5, ctx, e_kappa=0.2)
        total = math.sqrt(sum(v ** 2 for v in r.sigma_breakdown.values()))
        assert rel(r.rel_sigma, total) < 1e-15
        assert set(r.sigma_breakdown) == {"G", "c", "hbar", "H", "kappa"}
        assert r.method == "closed_form"

    def test_e_kappa_enters_budget(self, ctx):
        r = transition_scale(1.7, 1e-5, ctx, e_kappa=0.2)
        assert rel(r.rel_sigma, rel_sigma_oracle(1.7, e_kappa=0.2)) < 1e-12
        assert rel(r.sigma_breakdown["kappa"], 0.2 / 4.7) < 1e-12

    def test_domain_errors(self, ctx):
        with pytest.raises(SlopeOutOfRange):
            transition_scale(1.0, 1.0, ctx)
        with pytest.raises(SlopeOutOfRange):
            transition_scale(3.2, 1.0, ctx)
        with pytest.raises(KappaOutOfRange):
            transition_scale(1.7, 0.0, ctx)
        with pytest.raises(KappaOutOfRange):
            transition_scale(1.7, 1.2, ctx)
        with pytest.raises(ValidationError):
            transition_scale(1.7, 1.0, ctx, e_kappa=-0.1)

    def test_monotone_in_kappa(self, ctx):
        kappas = [10.0 ** e for e in range(-20, 1, 2)]
        values = [transition_scale(1.8, k, ctx).lambda0.value for k in kappas]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_monotone_in_slope(self, ctx):
        slopes = [1.6 + 0.05 * i for i in range(13)]  # 1.6 .. 2.2
        for kappa in (1.0, 1e-5, 1e-20):
            values = [transition_scale(a, kappa, ctx).lambda0.value for a in slopes]
            assert all(x < y for x, y in zip(values, values[1:]))

    def test_rel_sigma_independent_of_kappa(self, ctx):
        base = transition_scale(1.8, 1.0, ctx).rel_sigma
        for kappa in (1e-20, 1e-10, 1e-5):
            assert transition_scale(1.8, kappa, ctx).rel_sigma == base


class TestNumericCrossover:
    def test_agrees_with_closed_form(self, ctx):
        vac = Boyer.from_context(ctx)
        for a in (1.7, 2.0):
            for kappa in (1.0, 1e-10):
                turb = PowerLawTurbulence.from_kappa(ctx, kappa, a)
                k0 = numeric_crossover(vac, turb, ctx)
                assert rel(k0.value, transition_scale(a, kappa, ctx).k0.value) < 1e-9

    def test_spectra_equal_at_root(self, ctx):
        vac = Boyer.from_context(ctx)
        turb = PowerLawTurbulence.from_kappa(ctx, 1e-5, 1.8)
        k0 = numeric_crossover(vac, turb, ctx)
        assert rel(vac.evaluate(k0).value, turb.evaluate(k0).value) < 1e-9

    def test_truncated_vacuum_spectrum_works(self, ctx):
        vac = TruncatedBoyer.from_context(ctx)
        turb = PowerLawTurbulence.from_kappa(ctx, 1.0, 1.8)
        k0 = numeric_crossover(vac, turb, ctx)
        assert rel(k0.value, transition_scale(1.8, 1.0, ctx).k0.value) < 1e-9

    def test_zero_amplitude_no_crossing(self, ctx):
        from fractions import Fraction
        vac = Boyer.from_context(ctx)
        dim = SPECTRAL_DENSITY * WAVENUMBER ** Fraction(2.0)
        silent = PowerLawTurbulence(Quantity(0.0, dim), 2.0)
        with pytest.raises(NoCrossing):
            numeric_crossover(vac, silent, ctx)

    def test_bracket_missing_root(self, ctx):
        vac = Boyer.from_context(ctx)
        turb = PowerLawTurbulence.from_kappa(ctx, 1.0, 1.8)
        bracket = (Quantity(1e10, WAVENUMBER), Quantity(1e12, WAVENUMBER))
        with pytest.raises(NoCrossing):
            numeric_crossover(vac, turb, ctx, bracket=bracket)

    def test_invalid_bracket(self, ctx):
        vac = Boyer.from_context(ctx)
        turb = PowerLawTurbulence.from_kappa(ctx, 1.0, 1.8)
        with pytest.raises(InvalidBracket):
            numeric_crossover(vac, turb, ctx,
                              bracket=(Quantity(1e3, WAVENUMBER), Quantity(1.0, WAVENUMBER)))
        with pytest.raises(InvalidBracket):
            numeric_crossover(vac, turb, ctx,
                              bracket=(Quantity(1.0), Quantity(2.0)))

    def test_numeric_result_wrapper(self, ctx):
        k0 = Quantity(0.5, WAVENUMBER)
        result = TransitionResult.from_numeric_k0(k0)
        assert result.method == "numeric_root"
        assert result.lambda0.value == 2.0 * math.pi / 0.5


class TestSigmaApproximation:
    def test_reference_point(self):
        assert rel(sigma_approximation(2.0, 0.15), 0.09) < 1e-15

    def test_zero_uncertainty(self):
        assert sigma_approximation(1.8, 0.0) == 0.0

    def test_close_to_full_formula(self, ctx):
        # dominant-H approximation within 1% of the full budget
        for i in range(7):
            a = 1.7 + 0.05 * i
            full = transition_scale(a, 1.0, ctx).rel_sigma
            approx = sigma_approximation(a, E_H)
            assert abs(full - approx) / full < 0.01


class TestLogForm:
    def test_identity_with_closed_form(self, ctx):
        for a in (1.7, 1.8, 2.0):
            for kappa in (1.0, 1e-5):
                closed = transition_scale(a, kappa, ctx).lambda0.value
                assert rel(log_form_scale(a, kappa, ctx).value, closed) < 1e-12

    def test_constants(self, ctx):
        # oracle: direct logarithms of the registry defaults
        c1, c2 = log_form_constants(ctx)
        assert rel(c1, math.log(3.0 * C ** 2 * H / (8.0 * math.pi * G * HBAR))) < 1e-12
        assert rel(c2, math.log(H / C)) < 1e-12
        assert abs(c1 - 98.05) < 0.01
        assert abs(-c2 - 60.05) < 0.01

    def test_reference_value(self, ctx):
        assert rel(log_form_scale(2.0, 1e-5, ctx).value, 5.18e3) < 1e-3


class TestMonteCarlo:
    def test_deterministic_given_seed(self, ctx):
        a = monte_carlo_scale(1.8, 1e-5, 2000, 42, ctx)
        b = monte_carlo_scale(1.8, 1e-5, 2000, 42, ctx)
        assert a.mean.value == b.mean.value
        assert a.rel_sigma == b.rel_sigma

    def test_matches_analytic_budget(self, ctx):
        for a in (1.7, 2.0):
            mc = monte_carlo_scale(a, 1.0, 100000, 20260810, ctx)
            assert abs(mc.rel_sigma - rel_sigma_oracle(a)) / rel_sigma_oracle(a) < 0.03

    def test_all_exact_constants(self):
        exact = CosmologyContext.default({"e_G": 0.0, "e_hbar": 0.0, "e_H": 0.0})
        mc = monte_carlo_scale(2.0, 1.0, 1000, 7, exact)
        closed = transition_scale(2.0, 1.0, exact).lambda0.value
        # rel_sigma is zero up to the roundoff of the vectorised mean
        assert mc.rel_sigma < 1e-15
        assert rel(mc.mean.value, closed) < 1e-12
        assert mc.rejected == 0

    def test_normal_sampling_mode(self, ctx):
        mc = monte_carlo_scale(2.0, 1.0, 5000, 3, ctx, sampling="normal")
        assert mc.rel_sigma > 0.0
        assert mc.rejected == 0  # 6.7 sigma to a negative H, never drawn

    def test_sample_count_precondition(self, ctx):
        with pytest.raises(ValidationError):
            monte_carlo_scale(1.8, 1.0, 999, 0, ctx)

    def test_unknown_sampling_mode(self, ctx):
        with pytest.raises(ValidationError):
            monte_carlo_scale(1.8, 1.0, 2000, 0, ctx, sampling="bootstrap")


class TestReferenceScale:
    def test_formula(self):
        # 12 * kappa**(-3/14) metres; -3/14 is -1/(3+a) at a = 5/3
        assert kolmogorov_reference_scale(1.0).value == 12.0
        expected = 12.0 * (1e-5) ** (-3.0 / 14.0)
        assert rel(kolmogorov_reference_scale(1e-5).value, expected) < 1e-15
        assert rel(expected, 141.45) < 1e-4

    def test_domain(self):
        with pytest.raises(KappaOutOfRange):
            kolmogorov_reference_scale(0.0)
