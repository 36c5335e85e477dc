import numpy as np
from django.test import SimpleTestCase
from numpy.testing import assert_allclose

from services.exceptions import DegenerateFactorizationError, ZeroEnergyNodeError
from services.susy_service import (
    DOOLITTLE,
    GAUGES,
    PAPER_CONJUGATE,
    build_partner,
    factorization_errors,
    ladder_pair,
    partner,
    partner_polys,
    recover_factors,
    sigma_tau,
    superpotential_pair,
    zero_mode_consistency,
)
from services.tridiag_service import TridiagonalOperator, recurrence_eval, truncate


def random_operator(seed, N=9):
    rng = np.random.default_rng(seed)
    return TridiagonalOperator(
        rng.uniform(2, 4, N) + 1j * rng.uniform(-1, 1, N),
        rng.uniform(0.5, 1, N - 1) + 1j * rng.uniform(-0.5, 0.5, N - 1),
        rng.uniform(0.5, 1, N - 1) + 1j * rng.uniform(-0.5, 0.5, N - 1),
    )


def positive_operator(seed, N=8):
    rng = np.random.default_rng(seed)
    off = rng.uniform(0.3, 1.0, N - 1)
    return TridiagonalOperator(rng.uniform(2.5, 5, N), off, off, pseudo_symmetric=True)


def relative(a, b):
    return np.max(np.abs(a - b)) / np.max(np.abs(b))


class SigmaTauTests(SimpleTestCase):

    def test_identity_is_exact(self):
        op = random_operator(1)
        pc = sigma_tau(op)
        self.assertEqual(pc.tau[0], 0)
        assert_allclose(pc.sigma + pc.tau, op.diag, rtol=1e-14)

    def test_sigma_from_next_polynomial(self):
        op = random_operator(2)
        pc = sigma_tau(op)
        P0 = pc.origin_values
        for n in range(op.size - 1):
            assert_allclose(pc.sigma[n], -op.sup[n] * P0[n + 1] / P0[n], rtol=1e-12)

    def test_zero_energy_node(self):
        op = TridiagonalOperator([0.0, 1.0], [1.0], [1.0])
        with self.assertRaises(ZeroEnergyNodeError) as ctx:
            sigma_tau(op)
        self.assertEqual(ctx.exception.index, 1)
        self.assertEqual(ctx.exception.stage, 'factorization')

    def test_zero_mode_at_last_index(self):
        op = TridiagonalOperator([1.0, 1.0], [1.0], [1.0])
        partner_op, pc, fp = build_partner(op)
        assert_allclose(pc.sigma, [1.0, 0.0], atol=1e-15)
        self.assertEqual(fp.c[1], 0)
        assert_allclose(partner_op.diag, [2.0])

    def test_worked_example_constant_operator(self):
        N = 5
        op = TridiagonalOperator(np.full(N, 2.0), np.full(N - 1, -1.0), np.full(N - 1, -1.0))
        pc = sigma_tau(op)
        n = np.arange(N)
        assert_allclose(pc.origin_values, n + 1, rtol=1e-14)
        assert_allclose(pc.sigma, (n + 2) / (n + 1), rtol=1e-14)
        assert_allclose(pc.tau, n / (n + 1), rtol=1e-14, atol=0)
        fp = recover_factors(op, pc, PAPER_CONJUGATE)
        assert_allclose(fp.v[1], np.sqrt(0.5), rtol=1e-14)
        assert_allclose(fp.c[0], -np.sqrt(2.0), rtol=1e-14)
        assert_allclose(fp.u[0], -np.sqrt(2.0), rtol=1e-14)
        partner_op = partner(op, pc, fp)
        m = np.arange(N - 1)
        assert_allclose(partner_op.diag[0], 2.5, rtol=1e-14)
        assert_allclose(partner_op.diag, (m + 2) / (m + 1) + (m + 1) / (m + 2), rtol=1e-14)
        m = np.arange(N - 2)
        assert_allclose(partner_op.sub * partner_op.sup, (m + 3) * (m + 1) / (m + 2) ** 2, rtol=1e-13)

    def test_near_cancelling_node(self):
        op = TridiagonalOperator([1.0, 1.0 + 2.0 ** -52, 3.0], [1.0, 1.0], [1.0, 1.0])
        with self.assertRaises(ZeroEnergyNodeError) as ctx:
            sigma_tau(op)
        self.assertEqual(ctx.exception.index, 2)

    def test_near_diagonal_operator(self):
        op = TridiagonalOperator([1.0, 2.0, 3.0], [1e-6, 1e-6], [1e-6, 1e-6])
        pc = sigma_tau(op)
        assert_allclose(pc.tau, 0.0, atol=1e-11)
        assert_allclose(pc.sigma, op.diag, rtol=1e-11)


class FactorizationTests(SimpleTestCase):

    def test_reconstruction_in_both_gauges(self):
        op = random_operator(3)
        H = truncate(op, op.size)
        for gauge in GAUGES:
            pc = sigma_tau(op)
            fp = recover_factors(op, pc, gauge)
            self.assertEqual(fp.gauge, gauge)
            self.assertEqual(fp.d[0], 0)
            self.assertEqual(fp.v[0], 0)
            self.assertLess(relative(fp.matrix_B() @ fp.matrix_A(), H), 1e-12)
            assert_allclose(fp.c * fp.u, pc.sigma, rtol=1e-12)
            assert_allclose(fp.d[1:] * fp.v[1:], pc.tau[1:], rtol=1e-12)

    def test_partner_is_truncated_ab(self):
        op = random_operator(4)
        partner_op, pc, fp = build_partner(op, DOOLITTLE)
        self.assertEqual(partner_op.size, op.size - 1)
        AB = (fp.matrix_A() @ fp.matrix_B())[:op.size - 1, :op.size - 1]
        self.assertLess(relative(truncate(partner_op, partner_op.size), AB), 1e-13)
        errors = factorization_errors(op, pc, fp, partner_op)
        self.assertEqual(set(errors), {'identity_sigma_tau', 'reconstruction_BA', 'partner_AB'})
        self.assertLess(max(errors.values()), 1e-12)

    def test_gauge_invariance(self):
        op = random_operator(5)
        pc = sigma_tau(op)
        conjugate = partner(op, pc, recover_factors(op, pc, PAPER_CONJUGATE))
        doolittle = partner(op, pc, recover_factors(op, pc, DOOLITTLE))
        assert_allclose(conjugate.diag, doolittle.diag, rtol=1e-14)
        assert_allclose(conjugate.sub * conjugate.sup, doolittle.sub * doolittle.sup, rtol=1e-12)

    def test_unknown_gauge(self):
        op = random_operator(6)
        with self.assertRaises(ValueError):
            recover_factors(op, sigma_tau(op), 'lu')

    def test_vanishing_subdiagonal(self):
        op = TridiagonalOperator([1.0, 1.0], [0.0], [1.0])
        pc = sigma_tau(op)
        for gauge in GAUGES:
            with self.assertRaises(DegenerateFactorizationError) as ctx:
                recover_factors(op, pc, gauge)
            self.assertEqual(ctx.exception.index, 1)

    def test_relatively_small_subdiagonal(self):
        op = TridiagonalOperator([1.0, 1.0], [1e-20], [1.0])
        pc = sigma_tau(op)
        for gauge in GAUGES:
            with self.assertRaises(DegenerateFactorizationError):
                recover_factors(op, pc, gauge)

    def test_seeded_batch_reconstruction(self):
        checked = 0
        for seed in range(100, 150):
            rng = np.random.default_rng(seed)
            N = 50
            op = TridiagonalOperator(
                rng.uniform(-2, 2, N) + 1j * rng.uniform(-2, 2, N),
                rng.uniform(-1, 1, N - 1) + 1j * rng.uniform(-1, 1, N - 1),
                rng.uniform(-1, 1, N - 1) + 1j * rng.uniform(-1, 1, N - 1),
            )
            try:
                pc = sigma_tau(op)
            except ZeroEnergyNodeError:
                continue
            partners = {}
            for gauge in GAUGES:
                fp = recover_factors(op, pc, gauge)
                partners[gauge] = partner(op, pc, fp)
                errors = factorization_errors(op, pc, fp, partners[gauge])
                self.assertLessEqual(max(errors.values()), 1e-12, f"seed={seed}, gauge={gauge}: {errors}")
            conjugate, doolittle = partners[PAPER_CONJUGATE], partners[DOOLITTLE]
            self.assertLessEqual(relative(conjugate.diag, doolittle.diag), 1e-12)
            self.assertLessEqual(relative(conjugate.sub * conjugate.sup, doolittle.sub * doolittle.sup), 1e-12)
            checked += 1
        self.assertGreater(checked, 40)

    def test_complex_zero_mode_partner_spectrum(self):
        rng = np.random.default_rng(40)
        N = 40
        c = rng.uniform(0.5, 1.5, N) * np.exp(1j * rng.uniform(0, 2 * np.pi, N))
        c[N - 1] = 0
        d = np.zeros(N, dtype=complex)
        d[1:] = rng.uniform(0.3, 0.8, N - 1) * np.exp(1j * rng.uniform(0, 2 * np.pi, N - 1))
        diag = np.abs(c) ** 2 + np.abs(d) ** 2
        sub = np.conj(d[1:]) * c[:N - 1]
        sup = np.conj(c[:N - 1]) * d[1:]
        levels = np.linalg.eigvalsh(truncate(TridiagonalOperator(diag, sub, sup), N))

        s = np.exp(0.05 * np.arange(N))
        op = TridiagonalOperator(diag, sub * s[1:] / s[:-1], sup * s[:-1] / s[1:])
        partner_op, pc, _ = build_partner(op)
        self.assertLess(abs(pc.sigma[-1]), 1e-10)
        partner_levels = np.linalg.eigvals(truncate(partner_op, N - 1))
        self.assertLess(np.max(np.abs(partner_levels.imag)), 1e-8)
        assert_allclose(np.sort(partner_levels.real), np.delete(levels, np.argmin(np.abs(levels))), atol=1e-8)

    def test_hermitian_partner_stays_symmetric(self):
        op = positive_operator(7)
        partner_op, _, _ = build_partner(op)
        self.assertTrue(partner_op.pseudo_symmetric)
        assert_allclose(partner_op.sub, partner_op.sup, rtol=1e-12)
        assert_allclose(partner_op.diag.imag, 0.0, atol=1e-14)

    def test_isospectral_after_removing_ground_state(self):
        op = positive_operator(8)
        levels = np.linalg.eigvalsh(truncate(op, op.size).real)
        shifted = op.shifted(-levels[0])
        partner_op, pc, _ = build_partner(shifted)
        self.assertLess(abs(pc.sigma[-1]), 1e-12)
        partner_levels = np.sort(np.linalg.eigvals(truncate(partner_op, partner_op.size)).real)
        assert_allclose(partner_levels, levels[1:] - levels[0], atol=1e-9)

    def test_zero_mode_consistency(self):
        op = random_operator(9)
        self.assertLess(abs(zero_mode_consistency(op, sigma_tau(op))), 1e-12)


class PartnerPolynomialTests(SimpleTestCase):

    def test_kernel_form_matches_partner_recurrence(self):
        op = random_operator(10)
        energies = np.array([0.4 + 0.1j, -1.2, 2.5 - 0.7j])
        table = recurrence_eval(op, energies, op.size - 1)
        for gauge in GAUGES:
            partner_op, pc, fp = build_partner(op, gauge)
            direct = recurrence_eval(partner_op, energies, partner_op.size - 1)
            for n in range(op.size - 1):
                kernel = partner_polys(op, table, n, fp)
                self.assertLess(relative(kernel, direct.values[n]), 1e-9)

    def test_first_partner_polynomial_is_one(self):
        op = random_operator(11)
        table = recurrence_eval(op, [0.3, 0.9j], 3)
        assert_allclose(partner_polys(op, table, 0), [1.0, 1.0], rtol=1e-14)

    def test_table_must_reach_next_degree(self):
        op = random_operator(12)
        table = recurrence_eval(op, [0.3], 2)
        with self.assertRaises(IndexError):
            partner_polys(op, table, 2)


class LadderAndSuperpotentialTests(SimpleTestCase):

    def test_ladder_case_is_diagonal(self):
        d = np.sqrt(np.arange(5, dtype=float))
        fp = ladder_pair(d)
        assert_allclose(fp.matrix_B() @ fp.matrix_A(), np.diag(np.arange(5.0)), atol=1e-14)
        AB = fp.matrix_A() @ fp.matrix_B()
        assert_allclose(np.diag(AB)[:4], np.arange(1.0, 5.0), atol=1e-14)
        with self.assertRaises(ValueError):
            ladder_pair([1.0, 2.0])

    def test_oscillator_superpotential(self):
        x = np.linspace(-2, 2, 5)
        minus, plus = superpotential_pair(lambda t: t, x, 1e-3)
        assert_allclose(minus, x ** 2 - 1, atol=1e-10)
        assert_allclose(plus, x ** 2 + 1, atol=1e-10)
        with self.assertRaises(ValueError):
            superpotential_pair(lambda t: t, x, 0.0)
