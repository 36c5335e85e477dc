import math

import numpy as np
from django.test import SimpleTestCase
from numpy.polynomial.hermite import hermgauss
from numpy.testing import assert_allclose, assert_array_equal

from services.exceptions import QuadratureError
from services.hamiltonian_service import MorseParams, morse_potential
from services.quadrature_service import (
    HermiteBasis,
    basis_rule,
    golub_welsch,
    hamiltonian_matrix,
    kinetic_matrix,
    normalized_hermite,
    potential_matrix,
    reality_scan,
)
from services.tridiag_service import eigenvalues


class GolubWelschTests(SimpleTestCase):

    def test_matches_reference_rule(self):
        for N in (2, 7, 30):
            nodes, weights = golub_welsch(N)
            ref_nodes, ref_weights = hermgauss(N)
            assert_allclose(nodes, ref_nodes, atol=1e-12)
            assert_allclose(weights, ref_weights, rtol=1e-10, atol=1e-300)

    def test_exact_symmetry_and_moments(self):
        nodes, weights = golub_welsch(11)
        assert_array_equal(nodes, -nodes[::-1])
        self.assertEqual(nodes[5], 0.0)
        assert_allclose(np.sum(weights), math.sqrt(math.pi), rtol=1e-13)
        assert_allclose(np.sum(weights * nodes ** 2), math.sqrt(math.pi) / 2, rtol=1e-13)

    def test_single_node(self):
        nodes, weights = golub_welsch(1)
        assert_array_equal(nodes, [0.0])
        assert_allclose(weights, [math.sqrt(math.pi)])
        with self.assertRaises(ValueError):
            golub_welsch(0)


class BasisTests(SimpleTestCase):

    def test_validation(self):
        with self.assertRaises(ValueError):
            HermiteBasis(0.0, 5)
        with self.assertRaises(ValueError):
            HermiteBasis(1.0, 0)

    def test_normalization(self):
        basis = HermiteBasis(1.7, 10)
        for n in range(6):
            expected = math.sqrt(1.7 / (2 ** n * math.factorial(n) * math.sqrt(math.pi)))
            assert_allclose(basis.normalization(n), expected, rtol=1e-13)

    def test_ground_state_profile(self):
        basis = HermiteBasis(2.0, 4)
        x = np.linspace(-1, 1, 5)
        expected = math.sqrt(2.0) * math.pi ** -0.25 * np.exp(-(2 * x) ** 2 / 2)
        assert_allclose(basis.evaluate(0, x), expected, rtol=1e-14)

    def test_normalized_hermite_orthonormal(self):
        nodes, weights = hermgauss(20)
        h = normalized_hermite(9, nodes)
        assert_allclose((h * weights) @ h.T, np.eye(10), atol=1e-12)

    def test_transform_is_orthogonal(self):
        rule = basis_rule(HermiteBasis(0.9, 25))
        assert_allclose(rule.transform @ rule.transform.T, np.eye(25), atol=1e-12)
        assert_allclose(rule.nodes, rule.reduced_nodes / 0.9)

    def test_parity_of_transform(self):
        rule = basis_rule(HermiteBasis(1.0, 12))
        G = rule.transform
        for n in range(12):
            assert_array_equal(G[n, ::-1], (-1) ** n * G[n])


class MatrixElementTests(SimpleTestCase):

    def test_harmonic_oscillator_block(self):
        N = 16
        basis = HermiteBasis(1.0, N)
        H = hamiltonian_matrix(lambda x: 0.5 * x ** 2, basis)
        block = H[:N - 1, :N - 1]
        assert_allclose(block, np.diag(np.arange(N - 1) + 0.5), atol=1e-11)

    def test_scaled_position_squared(self):
        lam, N = 1.6, 14
        rule = basis_rule(HermiteBasis(lam, N))
        X2 = potential_matrix(lambda x: x ** 2, rule)
        n = np.arange(N - 2)
        assert_allclose(np.diag(X2)[:N - 1], (2 * np.arange(N - 1) + 1) / (2 * lam ** 2), rtol=1e-12)
        assert_allclose(np.diag(X2, 2)[:N - 3], np.sqrt((n[:N - 3] + 1) * (n[:N - 3] + 2)) / (2 * lam ** 2), rtol=1e-12)

    def test_kinetic_band(self):
        T = kinetic_matrix(HermiteBasis(2.0, 5))
        assert_allclose(np.diag(T), [1, 3, 5, 7, 9])
        assert_allclose(T[0, 2], -math.sqrt(2))
        self.assertEqual(T[0, 1], 0.0)

    def test_non_finite_potential(self):
        rule = basis_rule(HermiteBasis(1.0, 5))
        with self.assertRaises(QuadratureError) as ctx:
            potential_matrix(lambda x: np.where(x == 0, np.inf, 1.0), rule)
        self.assertEqual(ctx.exception.node, 0.0)
        self.assertEqual(ctx.exception.stage, 'quadrature')

    def test_potential_matrix_is_symmetric(self):
        p = MorseParams(1.0, 1.0)
        rule = basis_rule(HermiteBasis(2.0, 20))
        V = potential_matrix(lambda x: morse_potential(p, x), rule)
        assert_array_equal(V, V.T)

    def test_oscillator_spectrum(self):
        H = hamiltonian_matrix(lambda x: 0.5 * x ** 2, HermiteBasis(1.0, 30))
        report = eigenvalues(H)
        assert_allclose(report.eigenvalues.real[:10], np.arange(10) + 0.5, atol=1e-9)
        self.assertEqual(report.classification, (30, 0, 0))


class RealityScanTests(SimpleTestCase):

    def test_hermitian_potential_stays_real(self):
        records = reality_scan(lambda x: 0.5 * x ** 2 + 0.1 * x ** 4, [0.8, 1.5], 20, imag_tol=1e-8)
        for record in records:
            self.assertTrue(record.ok)
            self.assertEqual((record.pair_count, record.unpaired_count), (0, 0))
            self.assertEqual(record.real_count, 20)

    def test_morse_pairs_disappear_with_scale(self):
        lambdas = [1.5, 5.0, 10.0, 12.0, 15.0]
        observed = []
        for V0, alpha in ((1.0, 1.0), (0.5, 1.0), (1.0, 0.5)):
            p = MorseParams(V0, alpha)
            records = reality_scan(lambda x: morse_potential(p, x), lambdas, 70, imag_tol=1e-8)
            self.assertTrue(all(r.ok for r in records))
            self.assertTrue(all(r.unpaired_count == 0 for r in records))
            pairs = [r.pair_count for r in records]
            observed.append(all(a >= b for a, b in zip(pairs, pairs[1:])) and pairs[-1] == 0)
        self.assertTrue(any(observed))

    def test_workers_preserve_order(self):
        p = MorseParams(1.0, 1.0)
        lambdas = [2.0, 4.0, 6.0, 8.0]
        serial = reality_scan(lambda x: morse_potential(p, x), lambdas, 30, workers=1)
        threaded = reality_scan(lambda x: morse_potential(p, x), lambdas, 30, workers=3)
        self.assertEqual([r.lam for r in threaded], lambdas)
        self.assertEqual([r.pair_count for r in threaded], [r.pair_count for r in serial])

    def test_failed_points_are_recorded(self):
        records = reality_scan(lambda x: x ** 2, [1.0, 2.0], 6, tol=-1.0)
        for record in records:
            self.assertFalse(record.ok)
            self.assertIsNone(record.pair_count)
            self.assertIn('tolerancia', record.error)


class QuadratureAccuracyTests(SimpleTestCase):

    def test_large_rules_are_well_formed(self):
        for N in (50, 100, 200):
            nodes, weights = golub_welsch(N)
            self.assertTrue(np.all(weights > 0))
            self.assertTrue(np.all(np.diff(nodes) > 0))
            assert_allclose(np.sum(weights), math.sqrt(math.pi), rtol=1e-12)

    def test_transform_orthonormal_at_80(self):
        G = basis_rule(HermiteBasis(1.3, 80)).transform
        assert_allclose(G @ G.T, np.eye(80), atol=1e-10)
        assert_allclose(G.T @ G, np.eye(80), atol=1e-10)

    def test_cubic_potential_is_exact(self):
        lam, N = 1.3, 12
        rule = basis_rule(HermiteBasis(lam, N))
        S = potential_matrix(lambda x: x ** 3 + 2 * x, rule)
        size = N + 5
        k = np.arange(size - 1)
        Y = np.diag(np.sqrt((k + 1) / 2.0), 1) + np.diag(np.sqrt((k + 1) / 2.0), -1)
        X = Y / lam
        exact = (X @ X @ X + 2 * X)[:N, :N]
        n, m = np.indices((N, N))
        exact_entries = n + m + 3 <= 2 * N - 1
        assert_allclose(S.real[exact_entries], exact[exact_entries], atol=1e-11)
        assert_allclose(S.imag, 0.0, atol=0)

    def test_morse_matrix_pt_closure(self):
        p = MorseParams(1.0, 1.0)
        M = hamiltonian_matrix(lambda x: morse_potential(p, x), HermiteBasis(2.0, 40))
        parity = np.diag((-1.0) ** np.arange(40))
        assert_allclose(np.conj(M), parity @ M @ parity, atol=1e-12 * np.max(np.abs(M)))
