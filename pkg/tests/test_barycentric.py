"""Barycentric weights and the two evaluation formulas.

Weight vectors are checked against hand-computed products, the two formulas
against each other and against the coefficient route, and the shrinkage
semantics at and near nodes.
"""

import math

import numpy as np
import pytest

from tikbary.barycentric import (
    BarycentricData,
    interp_barycentric,
    interp_modified_lagrange,
    weights_gauss,
    weights_product,
)
from tikbary.basis import BasisSpec
from tikbary.metrics import LAMBDA_STAR
from tikbary.quadrature import gauss_rule
from tikbary.regularized_fit import evaluate, fit
from tikbary.signals import f1

CHEB = BasisSpec.chebyshev1()
LEG = BasisSpec.legendre()


def _rng(seed):
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


class TestWeightsProduct:
    def test_three_point_hand_values(self):
        np.testing.assert_array_equal(
            weights_product(np.array([-1.0, 0.0, 1.0])),
            np.array([0.5, -1.0, 0.5]))

    def test_two_point_hand_values(self):
        np.testing.assert_array_equal(
            weights_product(np.array([-1.0, 1.0])),
            np.array([-0.5, 0.5]))

    def test_signs_alternate(self):
        # compare signs, not products: adjacent weights near 1e-200 would
        # underflow when multiplied
        for n in (5, 30, 600):
            nodes = np.sort(_rng(n).uniform(-1.0, 1.0, n))
            w = weights_product(nodes)
            assert np.all(w != 0.0)
            assert np.all(np.sign(w[:-1]) == -np.sign(w[1:]))

    def test_log_path_matches_direct_path_in_shape(self):
        # 514 nodes goes through log accumulation; scale differs but the
        # normalized vectors must agree
        nodes = gauss_rule(CHEB, 514).nodes
        direct = 1.0 / np.prod(
            np.where(~np.eye(514, dtype=bool),
                     nodes[:, None] - nodes[None, :], 1.0), axis=1)
        got = weights_product(nodes)
        assert np.max(np.abs(got)) == pytest.approx(1.0)
        np.testing.assert_allclose(got, direct / np.max(np.abs(direct)),
                                   rtol=1e-9)

    def test_rejects_bad_node_sets(self):
        with pytest.raises(ValueError):
            weights_product(np.array([0.3]))
        with pytest.raises(ValueError):
            weights_product(np.array([0.1, 0.5, 0.1]))


class TestWeightsGauss:
    @pytest.mark.parametrize("spec", [CHEB, LEG], ids=["chebyshev1", "legendre"])
    @pytest.mark.parametrize("pts", [8, 61])
    def test_proportional_to_product_formula(self, spec, pts):
        rule = gauss_rule(spec, pts)
        ratio = weights_gauss(rule) / weights_product(rule.nodes)
        med = np.median(ratio)
        assert np.max(np.abs(ratio - med)) <= 1e-10 * abs(med)

    def test_chebyshev_closed_form(self):
        # up to one common factor the weights are (-1)^j sin((2j+1)pi/(2n))
        # in ascending node order
        rule = gauss_rule(CHEB, 10)
        j = np.arange(10)
        pattern = (-1.0) ** j * np.sin((2.0 * j + 1.0) * math.pi / 20.0)
        ratio = weights_gauss(rule) / pattern
        med = np.median(ratio)
        assert np.max(np.abs(ratio - med)) <= 1e-12 * abs(med)


class TestDataValidation:
    def test_weights_normalized_on_construction(self):
        nodes = np.array([-0.5, 0.0, 0.5])
        data = BarycentricData(nodes, np.array([4.0, -8.0, 4.0]),
                               np.zeros(3))
        np.testing.assert_array_equal(data.weights,
                                      np.array([0.5, -1.0, 0.5]))

    def test_rejects_malformed_inputs(self):
        nodes = np.array([-0.5, 0.0, 0.5])
        w = np.array([0.5, -1.0, 0.5])
        v = np.zeros(3)
        with pytest.raises(ValueError):
            BarycentricData(nodes[::-1], w, v)
        with pytest.raises(ValueError):
            BarycentricData(nodes, np.array([0.5, 0.0, 0.5]), v)
        with pytest.raises(ValueError):
            BarycentricData(nodes, np.array([0.5, 1.0, 0.5]), v)
        with pytest.raises(ValueError):
            BarycentricData(nodes, w, np.array([0.0, np.nan, 0.0]))
        with pytest.raises(ValueError):
            BarycentricData(nodes, w, v, lam=-0.1)
        with pytest.raises(ValueError):
            BarycentricData(nodes, w[:2], v)


class TestFormulas:
    def test_parabola_through_three_points(self):
        nodes = np.array([-1.0, 0.0, 1.0])
        data = BarycentricData(nodes, weights_product(nodes),
                               np.array([1.0, 0.0, 1.0]))
        assert interp_modified_lagrange(data, 0.5) == pytest.approx(
            0.25, abs=1e-15)
        assert interp_barycentric(data, 0.5) == pytest.approx(0.25, abs=1e-15)

    def test_constant_data(self):
        rule = gauss_rule(CHEB, 21)
        for lam in (0.0, LAMBDA_STAR):
            data = BarycentricData(rule.nodes, weights_gauss(rule),
                                   np.ones(21), lam)
            x = _rng(1).uniform(-1.0, 1.0, 50)
            np.testing.assert_allclose(interp_barycentric(data, x),
                                       1.0 / (1.0 + lam), rtol=1e-13)
            np.testing.assert_allclose(interp_modified_lagrange(data, x),
                                       1.0 / (1.0 + lam), rtol=1e-12)

    def test_two_formulas_agree(self):
        nodes = np.sort(_rng(2).uniform(-1.0, 1.0, 13))
        vals = _rng(3).uniform(-1.0, 1.0, 13)
        x = _rng(4).uniform(-1.0, 1.0, 500)
        for lam in (0.0, LAMBDA_STAR):
            data = BarycentricData(nodes, weights_product(nodes), vals, lam)
            a = interp_modified_lagrange(data, x)
            b = interp_barycentric(data, x)
            assert np.max(np.abs(a - b) / np.maximum(np.abs(b), 1e-30)) \
                <= 1e-10

    def test_partition_of_unity_on_gauss_nodes(self):
        x = _rng(5).uniform(-1.0, 1.0, 100)
        for spec in (CHEB, LEG):
            for pts in (10, 61):
                nodes = gauss_rule(spec, pts).nodes
                w = weights_product(nodes)
                for xv in x:
                    lx = np.prod(xv - nodes)
                    assert abs(lx * np.sum(w / (xv - nodes)) - 1.0) <= 1e-10

    @pytest.mark.parametrize("scale", [1e-8, 1.0, 1e8])
    def test_common_weight_scaling_is_immaterial(self, scale):
        rule = gauss_rule(LEG, 15)
        vals = f1(rule.nodes)
        base = BarycentricData(rule.nodes, weights_gauss(rule), vals,
                               LAMBDA_STAR)
        scaled = BarycentricData(rule.nodes, scale * weights_gauss(rule),
                                 vals, LAMBDA_STAR)
        x = _rng(6).uniform(-1.0, 1.0, 200)
        for form in (interp_barycentric, interp_modified_lagrange):
            a, b = form(base, x), form(scaled, x)
            assert np.max(np.abs(a - b) / np.maximum(np.abs(a), 1e-30)) \
                <= 1e-13

    def test_shrinkage_factor_law(self):
        rule = gauss_rule(CHEB, 31)
        vals = f1(rule.nodes)
        x = _rng(7).uniform(-1.0, 1.0, 100)
        plain = BarycentricData(rule.nodes, weights_gauss(rule), vals, 0.0)
        for lam in (1e-2, 1.0):
            shrunk = BarycentricData(rule.nodes, weights_gauss(rule), vals,
                                     lam)
            for form in (interp_barycentric, interp_modified_lagrange):
                a = form(shrunk, x)
                b = form(plain, x) / (1.0 + lam)
                assert np.max(np.abs(a - b) / np.abs(b)) <= 1e-13


class TestNodeSemantics:
    def test_exact_node_hit(self):
        rule = gauss_rule(CHEB, 21)
        vals = f1(rule.nodes)
        for lam in (0.0, LAMBDA_STAR):
            data = BarycentricData(rule.nodes, weights_gauss(rule), vals, lam)
            for j in (0, 10, 20):
                expected = vals[j] / (1.0 + lam)
                assert interp_barycentric(data, rule.nodes[j]) == expected
                assert interp_modified_lagrange(data, rule.nodes[j]) == expected

    def test_continuity_approaching_a_node(self):
        rule = gauss_rule(CHEB, 21)
        vals = f1(rule.nodes)
        data = BarycentricData(rule.nodes, weights_gauss(rule), vals,
                               LAMBDA_STAR)
        tol = 1e-4 * np.max(np.abs(vals))
        for j in (0, 7, 20):
            target = vals[j] / (1.0 + LAMBDA_STAR)
            for h in (1e-6, 1e-9, 1e-12):
                x = rule.nodes[j] + h
                assert abs(interp_barycentric(data, x) - target) <= tol
                assert abs(interp_modified_lagrange(data, x) - target) <= tol

    def test_vanishing_denominator_raises(self):
        # unreachable through the validated constructor (alternating signs
        # keep the sum away from zero), so corrupt the weights behind it
        data = BarycentricData(np.array([-1.0, 1.0]), np.array([1.0, -1.0]),
                               np.zeros(2))
        object.__setattr__(data, "weights", np.array([1.0, 1.0]))
        with pytest.raises(RuntimeError):
            interp_barycentric(data, 0.0)


class TestAgainstCoefficientRoute:
    @pytest.mark.parametrize("spec", [CHEB, LEG], ids=["chebyshev1", "legendre"])
    @pytest.mark.parametrize("n", [16, 60])
    def test_full_degree_fit_equals_interpolation(self, spec, n):
        rule = gauss_rule(spec, n + 1)
        vals = f1(rule.nodes)
        x = _rng(8).uniform(-1.0, 1.0, 500)
        for lam in (0.0, LAMBDA_STAR):
            approx = fit(rule, n, lam, vals)
            data = BarycentricData(rule.nodes, weights_gauss(rule), vals, lam)
            assert np.max(np.abs(evaluate(approx, x)
                                 - interp_barycentric(data, x))) <= 1e-9

    def test_large_node_count_log_scale_path(self):
        rule = gauss_rule(CHEB, 601)
        vals = f1(rule.nodes)
        x = _rng(9).uniform(-1.0, 1.0, 200)
        prod_data = BarycentricData(rule.nodes, weights_product(rule.nodes),
                                    vals, LAMBDA_STAR)
        gauss_data = BarycentricData(rule.nodes, weights_gauss(rule), vals,
                                     LAMBDA_STAR)
        approx = fit(rule, 600, LAMBDA_STAR, vals)
        a = interp_modified_lagrange(prod_data, x)
        b = interp_barycentric(gauss_data, x)
        c = evaluate(approx, x)
        assert np.max(np.abs(a - b)) <= 1e-9
        assert np.max(np.abs(a - c)) <= 1e-9


class TestRescaledSamples:
    def test_shrinkage_nearly_cancels_a_known_input_scaling(self):
        # sampling 1.2 f and shrinking with the sweet-spot lambda is the same
        # interpolant as the classical one, times 1.2/(1+lambda) = 1.0004
        rule = gauss_rule(CHEB, 61)
        clean = f1(rule.nodes)
        omega = weights_gauss(rule)
        tik = BarycentricData(rule.nodes, omega, 1.2 * clean, LAMBDA_STAR)
        classical = BarycentricData(rule.nodes, omega, clean, 0.0)
        grid = np.linspace(-1.0, 1.0, 2001)
        factor = 1.2 / (1.0 + LAMBDA_STAR)
        assert factor == pytest.approx(1.0004, abs=1e-4)
        a = interp_barycentric(tik, grid)
        b = factor * interp_barycentric(classical, grid)
        assert np.max(np.abs(a - b)) <= 1e-12
        # at the nodes the rescaled data is reproduced to within the factor
        at_nodes = interp_barycentric(tik, rule.nodes)
        assert np.max(np.abs(at_nodes - clean)) <= abs(factor - 1.0) \
            * np.max(np.abs(clean)) + 1e-12
