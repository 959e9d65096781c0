"""Quadrature-layer tests: the averaging/kernel transforms, their exactness
on monomials, linearity, refinement behavior, the fixed integrals, and the
configuration plumbing.

Referees: the monomial law reduces every transform check to Wallis ratios
that the series layer computes exactly; cross-checks against the series
evaluators use independent summation paths.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from dilogkit.quadrature import (
    MENU,
    Integrand,
    QuadratureConfig,
    QuadResult,
    arccos_kernel_transform,
    arctan_arccot_integral,
    arctan_squared_integral,
    cot_kernel_integral,
    default_config,
    generalized_wallis_transform,
    lemma4_transform,
    monomial_integrand,
    wallis_coefficient_weights,
    wallis_transform,
)
from dilogkit.series import chi2, chi3, li2, ti2, wallis_value


class TestConfig:
    def test_defaults(self):
        cfg = QuadratureConfig()
        assert cfg.nodes_per_panel == 32
        assert cfg.panels == 8
        assert cfg.target_tol == 1e-12
        assert cfg.max_refinements == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            QuadratureConfig(nodes_per_panel=1)
        with pytest.raises(ValueError):
            QuadratureConfig(panels=0)
        with pytest.raises(ValueError):
            QuadratureConfig(target_tol=0.0)
        with pytest.raises(ValueError):
            QuadratureConfig(max_refinements=-1)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("DILOGKIT_PANELS", "5")
        assert default_config().panels == 5
        monkeypatch.delenv("DILOGKIT_PANELS")
        assert default_config().panels == 8

    def test_env_rejects_garbage(self, monkeypatch):
        for bad in ("bogus", "0", "-3", "2.5"):
            monkeypatch.setenv("DILOGKIT_PANELS", bad)
            with pytest.raises(ValueError):
                default_config()


class TestMenu:
    def test_keys(self):
        assert set(MENU) == {
            "arcsin",
            "arcsin2-over-pi",
            "arcsin-combo",
            "arsinh",
            "half-arsinh2",
            "half-arcsin2",
        }

    def test_entries_are_integrands(self):
        for tag, entry in MENU.items():
            assert isinstance(entry, Integrand)
            assert entry.tag == tag
            assert math.isfinite(entry.derivative_at_zero)
            assert entry.fn(0.0) == 0.0, tag


class TestMonomialLaw:
    # integral of sin^m over [0, pi/2] is (pi/2) w_m for even m, w_m for odd.
    @pytest.mark.parametrize("m", list(range(0, 21)))
    @pytest.mark.parametrize("t", [0.3, 0.7, 1.0])
    def test_wallis_transform_on_monomials(self, m, t):
        value, err = wallis_transform(monomial_integrand(m), t)
        weight = (math.pi / 2 if m % 2 == 0 else 1.0) * wallis_value(m)
        assert abs(value - t**m * weight) < 1e-12
        assert err < 1e-12

    def test_weights_helper_matches_law(self):
        w = wallis_coefficient_weights(21)
        assert w.shape == (22,)
        for m in range(22):
            expected = (math.pi / 2 if m % 2 == 0 else 1.0) * wallis_value(m)
            assert w[m] == pytest.approx(expected, rel=4e-16)

    def test_monomial_zero_is_constant_one(self):
        value, _ = wallis_transform(monomial_integrand(0), 0.0)
        assert value == pytest.approx(math.pi / 2, rel=1e-14)

    def test_monomial_rejects_negative(self):
        with pytest.raises(ValueError):
            monomial_integrand(-1)


class TestLinearity:
    def test_random_combinations(self):
        rng = np.random.default_rng(42)
        f = MENU["arcsin"]
        g = MENU["half-arcsin2"]
        for _ in range(5):
            a, b = rng.uniform(-2.0, 2.0, size=2)
            combo = Integrand(
                fn=lambda x, a=a, b=b: a * f.fn(x) + b * g.fn(x),
                tag="combo",
                derivative_at_zero=a * f.derivative_at_zero + b * g.derivative_at_zero,
            )
            for t in (0.25, 0.8):
                lhs, _ = wallis_transform(combo, t)
                fa, _ = wallis_transform(f, t)
                gb, _ = wallis_transform(g, t)
                assert abs(lhs - (a * fa + b * gb)) < 1e-11
                k_lhs, _ = arccos_kernel_transform(combo, t)
                k_fa, _ = arccos_kernel_transform(f, t)
                k_gb, _ = arccos_kernel_transform(g, t)
                assert abs(k_lhs - (a * k_fa + b * k_gb)) < 1e-11


class TestRefinement:
    def test_result_type(self):
        res = wallis_transform(MENU["arcsin"], 0.5)
        assert isinstance(res, QuadResult)
        assert math.isfinite(res.value) and res.error_estimate >= 0.0

    def test_doubling_panels_is_consistent(self):
        f = MENU["arcsin"]
        for t in (0.3, 0.9, 1.0):
            v8, e8 = wallis_transform(f, t, QuadratureConfig(panels=8))
            v16, e16 = wallis_transform(f, t, QuadratureConfig(panels=16))
            assert abs(v8 - v16) <= 2 * (e8 + e16) + 1e-14
            assert abs(v8 - chi2(t)) < 1e-12
            assert abs(v16 - chi2(t)) < 1e-12

    def test_error_estimate_brackets_truth(self):
        # For these analytic integrands the estimate |fine - coarse| must
        # dominate the true residual by construction.
        for t in (0.4, 0.95):
            value, err = arccos_kernel_transform(MENU["arcsin"], t)
            assert abs(value - chi3(t)) <= err + 1e-13


class TestTransformsAgainstSeries:
    def test_wallis_arsinh_is_ti2_fine_grid(self):
        f = MENU["arsinh"]
        for t in np.linspace(0.0, 1.0, 50):
            value, _ = wallis_transform(f, float(t))
            assert abs(value - ti2(float(t))) < 1e-10

    def test_kernel_identity_integrand(self):
        # K applied to the identity function: the cosine cancels and what
        # remains is the integral of theta*sin(theta), which is exactly 1.
        ident = Integrand(fn=lambda x: x, tag="identity", derivative_at_zero=1.0)
        for t in (0.0, 0.3, 1.0):
            value, _ = arccos_kernel_transform(ident, t)
            assert abs(value - t) < 1e-12

    def test_generalized_alpha_one_reduces(self):
        f = MENU["arcsin"]
        for t in (0.2, 0.7):
            full = wallis_transform(f, t)
            gen = generalized_wallis_transform(f, t, 1.0)
            assert gen == full

    def test_generalized_alpha_zero_is_empty(self):
        assert generalized_wallis_transform(MENU["arcsin"], 0.5, 0.0) == (0.0, 0.0)

    def test_generalized_monotone_in_alpha(self):
        f = MENU["arcsin"]
        vals = [generalized_wallis_transform(f, 0.8, a).value for a in (0.2, 0.5, 0.8, 1.0)]
        assert all(x < y for x, y in zip(vals, vals[1:]))

    def test_generalized_alpha_domain(self):
        with pytest.raises(ValueError):
            generalized_wallis_transform(MENU["arcsin"], 0.5, 1.5)
        with pytest.raises(ValueError):
            generalized_wallis_transform(MENU["arcsin"], 0.5, -0.1)

    def test_t_domain(self):
        for transform in (wallis_transform, arccos_kernel_transform):
            with pytest.raises(ValueError):
                transform(MENU["arcsin"], 1.2)
            with pytest.raises(ValueError):
                transform(MENU["arcsin"], -0.1)
        with pytest.raises(ValueError):
            lemma4_transform(-0.5)

    def test_non_finite_sample_raises(self):
        bad = Integrand(
            fn=lambda x: np.full_like(np.asarray(x, dtype=float), np.nan),
            tag="bad",
            derivative_at_zero=0.0,
        )
        with pytest.raises(ValueError, match="non-finite integrand sample"):
            wallis_transform(bad, 1.0)


class TestFixedIntegrals:
    def test_lemma4_reproduces_li2(self):
        for t in (0.0, 0.25, 0.5, 0.75, 1.0):
            value, _ = lemma4_transform(t)
            assert abs(value - li2(t)) < 1e-9

    def test_cot_kernel_values_are_stable(self):
        v3a, e3 = cot_kernel_integral(3)
        v3b, _ = cot_kernel_integral(3)
        assert v3a == v3b
        assert e3 < 1e-10
        v4, e4 = cot_kernel_integral(4)
        assert math.isfinite(v4) and e4 < 1e-10

    def test_cot_kernel_domain(self):
        for bad in (2, 5, 0):
            with pytest.raises(ValueError):
                cot_kernel_integral(bad)

    def test_atan_acot_decomposition(self):
        # the product integral equals (pi/2)*G minus the squared-arctan one
        whole, _ = arctan_arccot_integral()
        squared, _ = arctan_squared_integral()
        catalan = ti2(1.0)
        assert abs(whole - (math.pi / 2 * catalan - squared)) < 1e-9

    def test_atan_acot_closed_form(self):
        # independent closed form: the product integral equals (7/8) zeta(3)
        whole, _ = arctan_arccot_integral()
        assert abs(whole - chi3(1.0)) < 1e-9


class TestDeterminism:
    def test_same_inputs_same_bits(self):
        a = wallis_transform(MENU["half-arsinh2"], 0.77)
        b = wallis_transform(MENU["half-arsinh2"], 0.77)
        assert a == b
        c = arccos_kernel_transform(MENU["arcsin-combo"], 0.33)
        d = arccos_kernel_transform(MENU["arcsin-combo"], 0.33)
        assert c == d
