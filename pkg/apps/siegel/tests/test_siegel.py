import math

import numpy as np
from django.test import SimpleTestCase

from apps.default.exceptions import InvalidInputError, UnsupportedError
from apps.siegel.managers.period_matrix import accola_maclachlan_period_matrix, load_generators
from apps.siegel.models import SiegelPoint, SymplecticMatrix, standard_form
from apps.siegel.serializers.siegel_serializer import FixedPointReportSerializer
from apps.siegel.utils.action import act, is_symplectic, probe_action_convention, translation
from apps.siegel.utils.relations import (
    closed_form_matrix,
    quartic,
    quartic_roots,
    relation_checks,
    verify_am_relations,
)
from apps.siegel.utils.solver import fixed_points, group_closure, invariant_seed

K2 = quartic_roots()[1]


def generic_point(g):
    return SiegelPoint(0.25 * np.ones((g, g)) + 1j * np.eye(g))


class SymplecticTests(SimpleTestCase):

    def test_standard_matrices(self):
        self.assertTrue(is_symplectic(standard_form(3)))
        self.assertTrue(is_symplectic(np.eye(4, dtype=int)))

    def test_accola_maclachlan_generators(self):
        for r in load_generators():
            with self.subTest(generator=r.name):
                self.assertTrue(is_symplectic(r.entries))
                self.assertEqual(r.g, 4)

    def test_not_symplectic(self):
        self.assertFalse(is_symplectic([[1, 1], [0, 2]]))
        with self.assertRaises(InvalidInputError):
            SymplecticMatrix(((1, 1), (0, 2)))

    def test_odd_dimension(self):
        with self.assertRaises(InvalidInputError):
            is_symplectic(np.eye(3, dtype=int))

    def test_inverse(self):
        for r in load_generators():
            self.assertTrue(np.array_equal((r @ r.inverse()).array, np.eye(8, dtype=int)))

    def test_closure_of_accola_maclachlan(self):
        self.assertEqual(len(group_closure(load_generators())), 40)

    def test_infinite_group(self):
        with self.assertRaises(UnsupportedError):
            group_closure([translation([[1]])], cap=50)


class ActionTests(SimpleTestCase):

    def test_identity(self):
        z = generic_point(4)
        self.assertLess(act(SymplecticMatrix.identity(4), z).distance(z), 1e-14)

    def test_inverse_undoes_action(self):
        z = generic_point(4)
        for r in load_generators():
            self.assertLess(act(r, act(r.inverse(), z)).distance(z), 1e-10)

    def test_translation(self):
        z = generic_point(2)
        moved = act(translation([[1, 0], [0, 2]]), z)
        self.assertLess(np.max(np.abs(moved.matrix - z.matrix - np.diag([1, 2]))), 1e-14)

    def test_result_stays_in_siegel_space(self):
        z = generic_point(4)
        for r in load_generators():
            self.assertTrue(act(r, z).is_valid())

    def test_genus_mismatch(self):
        with self.assertRaises(InvalidInputError):
            act(SymplecticMatrix.identity(2), generic_point(3))

    def test_convention_is_a_right_action(self):
        x_inv, zx = load_generators()
        self.assertEqual(probe_action_convention(x_inv, zx, generic_point(4)), 'right')

    def test_convention_on_random_products(self):
        rng = np.random.default_rng(7)
        pool = list(load_generators()) + [SymplecticMatrix.standard(4), translation(np.diag([1, 0, -1, 2]))]
        z = generic_point(4)
        for _ in range(10):
            r1 = pool[rng.integers(len(pool))] @ pool[rng.integers(len(pool))]
            r2 = pool[rng.integers(len(pool))] @ pool[rng.integers(len(pool))]
            self.assertEqual(probe_action_convention(r1, r2, z, tol=1e-8), 'right')


class RelationTests(SimpleTestCase):

    def test_roots(self):
        for k in quartic_roots():
            self.assertLess(abs(quartic(k)), 1e-12)
        self.assertAlmostEqual(K2.imag, math.sqrt(2 / 5 * math.sqrt(5) + 5) / 2)

    def test_closed_form_entries(self):
        z = closed_form_matrix(K2)
        self.assertAlmostEqual(z[0, 1].real, (math.sqrt(5) - 3) / 2, places=12)
        self.assertAlmostEqual(z[0, 2].real, 1 - math.sqrt(5) / 2, places=12)
        self.assertAlmostEqual(z[0, 3].real, 1 - math.sqrt(5) / 2, places=12)
        self.assertAlmostEqual(z[2, 2].imag, 1.2139, places=4)

    def test_root_filter(self):
        k1, k2, k3, k4 = quartic_roots()
        self.assertTrue(all(relation_checks(closed_form_matrix(k2)).values()))
        for k in (k1, k4):
            self.assertFalse(relation_checks(closed_form_matrix(k))['im_a_positive'])
        checks = relation_checks(closed_form_matrix(k3))
        self.assertTrue(checks['im_a_positive'])
        self.assertFalse(checks['delta_positive'])

    def test_quartic_fails_at_zero(self):
        self.assertFalse(relation_checks(closed_form_matrix(0))['quartic'])

    def test_wrong_shape(self):
        with self.assertRaises(InvalidInputError):
            relation_checks(np.eye(3))


class FixedPointTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.report = accola_maclachlan_period_matrix(seed=0, starts=8)

    def test_matches_closed_form(self):
        z = self.report.solution.matrix
        self.assertLess(np.max(np.abs(z - closed_form_matrix(K2))), 1e-9)
        self.assertAlmostEqual(z[0, 1].real, -0.381966, places=6)
        self.assertAlmostEqual(z[0, 2].real, -0.118034, places=6)
        self.assertLess(abs(self.report.k - K2), 1e-9)
        self.assertLess(abs(z[3, 3] - z[2, 2]), 1e-9)

    def test_diagnostics(self):
        self.assertLess(self.report.max_residual, 1e-10)
        self.assertGreater(self.report.solution.min_imag_eigenvalue, 0)
        self.assertLess(self.report.solution.symmetry_defect, 1e-10)
        self.assertEqual(self.report.locus_dimension, 0)
        self.assertEqual(self.report.convention, 'right')
        self.assertGreaterEqual(self.report.converged_starts, 1)

    def test_fixed_by_every_generator(self):
        for r in self.report.generators:
            self.assertLess(act(r, self.report.solution).distance(self.report.solution), 1e-10)

    def test_relations(self):
        self.assertTrue(all(self.report.relations.values()))
        self.assertTrue(verify_am_relations(self.report))
        k1, _, k3, _ = quartic_roots()
        self.assertFalse(verify_am_relations(self.report, k=k3))
        self.assertFalse(verify_am_relations(self.report, k=k1))
        self.assertFalse(verify_am_relations(self.report, k=0))

    def test_invariant_seed(self):
        seed = invariant_seed(load_generators())
        self.assertLess(np.max(np.abs(seed.matrix - closed_form_matrix(K2))), 1e-8)

    def test_serializer(self):
        data = FixedPointReportSerializer(self.report).data
        self.assertAlmostEqual(data['k'][1], K2.imag, places=9)
        self.assertEqual(data['locus_dimension'], 0)
        self.assertEqual(len(data['solution']), 4)
        self.assertTrue(FixedPointReportSerializer(data=data).is_valid())


class UnderdeterminedTests(SimpleTestCase):

    def test_identity_generator(self):
        report = fixed_points([SymplecticMatrix.identity(2)], seed=1, starts=3)
        self.assertEqual(report.locus_dimension, 3)
        self.assertEqual(len(report.tangent_basis), 3)
        self.assertTrue(report.solution.is_valid())

    def test_mixed_genus(self):
        with self.assertRaises(InvalidInputError):
            fixed_points([SymplecticMatrix.identity(2), SymplecticMatrix.identity(3)])

    def test_no_generators(self):
        with self.assertRaises(InvalidInputError):
            fixed_points([])
