from django.test import SimpleTestCase

from apps.characters.managers.character_table import char_table
from apps.characters.serializers.character_serializer import CharacterRowSerializer, RationalIrrepSerializer
from apps.characters.utils.class_functions import (
    antisym_square_char,
    fixed_dim,
    inner_product,
    sym_square_char,
    sym_sum_identity,
)
from apps.characters.utils.rational import SCHUR_INDEX, character_field_degree, rational_irreps
from apps.default.exceptions import UnsupportedError
from apps.groups.managers.group_builder import build_group
from apps.groups.utils.structure import conjugacy_classes, evaluate_word, subgroup_generated

SUPPORTED = ['C10', 'C5xC2', 'D5', 'D7', 'CqC4:q=5,rho=4', 'CqC4:q=5,rho=2', 'AM:q=5', 'C7xC3', 'D:5x2', 'C5xA4']


def degrees(group):
    return sorted(chi.degree for chi in char_table(group))


def trivial(group):
    return next(chi for chi in char_table(group) if all(v == 1 for v in chi.values))


class CharacterTableTests(SimpleTestCase):

    def test_complete_tables(self):
        for text in SUPPORTED:
            with self.subTest(group=text):
                group = build_group(text)
                table = char_table(group)
                self.assertEqual(sum(chi.degree ** 2 for chi in table), group.order)
                self.assertEqual(len(table), len(conjugacy_classes(group)))

    def test_orthogonality(self):
        for text in ['D5', 'CqC4:q=5,rho=2', 'AM:q=5']:
            table = char_table(build_group(text))
            for i, chi in enumerate(table):
                for j, psi in enumerate(table):
                    self.assertEqual(inner_product(chi, psi), int(i == j))

    def test_class_functions(self):
        group = build_group('AM:q=5')
        for chi in char_table(group):
            for cls in conjugacy_classes(group):
                self.assertEqual(len({chi(g).key() for g in cls}), 1)

    def test_accola_maclachlan(self):
        self.assertEqual(degrees(build_group('AM:q=5')), [1] * 4 + [2] * 9)

    def test_quadratic_semidirect(self):
        self.assertEqual(degrees(build_group('CqC4:q=5,rho=2')), [1, 1, 1, 1, 4])
        self.assertEqual(degrees(build_group('CqC4:q=13,rho=5')), [1] * 4 + [4] * 3)

    def test_dihedral(self):
        self.assertEqual(degrees(build_group('D5')), [1, 1, 2, 2])

    def test_cache_returns_same_table(self):
        group = build_group('D7')
        self.assertIs(char_table(group), char_table(group))

    def test_unsupported(self):
        with self.assertRaises(UnsupportedError):
            char_table(build_group('Q8'))

    def test_labels(self):
        self.assertTrue(all(chi.label.startswith('u=(') for chi in char_table(build_group('C10'))))
        self.assertTrue(all('|psi=' in chi.label for chi in char_table(build_group('D5'))))


class ClassFunctionTests(SimpleTestCase):

    def setUp(self):
        self.d7 = build_group('D7')
        self.psi = next(chi for chi in char_table(self.d7) if chi.degree == 2)

    def test_symmetric_square_at_identity(self):
        for chi in char_table(build_group('AM:q=5')):
            d = chi.degree
            self.assertEqual(sym_square_char(chi)(0), d * (d + 1) // 2)

    def test_sym_plus_antisym(self):
        for chi in char_table(build_group('CqC4:q=5,rho=2')):
            sym, alt = sym_square_char(chi), antisym_square_char(chi)
            for g in range(chi.group.order):
                self.assertEqual(sym(g) + alt(g), chi(g) * chi(g))

    def test_sym_sum_of_trivial(self):
        for text in ['D5', 'AM:q=5']:
            group = build_group(text)
            self.assertEqual(sym_sum_identity(trivial(group)), group.order)

    def test_sym_sum_identity_on_irreducibles(self):
        for chi in char_table(build_group('AM:q=5')):
            sym_sum_identity(chi)

    def test_fixed_dimensions(self):
        s = evaluate_word(self.d7, 's')
        r = evaluate_word(self.d7, 'r')
        self.assertEqual(fixed_dim(self.psi, subgroup_generated(self.d7, [s])), 1)
        self.assertEqual(fixed_dim(self.psi, subgroup_generated(self.d7, [r])), 0)
        self.assertEqual(fixed_dim(self.psi, {0}), 2)

    def test_fixed_dimension_is_monotone(self):
        group = build_group('AM:q=5')
        z = evaluate_word(group, 'z')
        small = subgroup_generated(group, [z])
        large = subgroup_generated(group, [z, evaluate_word(group, 'y')])
        for chi in char_table(group):
            self.assertLessEqual(fixed_dim(chi, large), fixed_dim(chi, small))

    def test_inner_product_of_sum(self):
        total = self.psi + trivial(self.d7)
        self.assertEqual(inner_product(total, total), 2)


class RationalIrrepTests(SimpleTestCase):

    def test_quadratic_semidirect(self):
        irreps = rational_irreps(build_group('CqC4:q=5,rho=2'))
        self.assertEqual(sorted((w.d, w.m) for w in irreps), [(1, 1), (1, 1), (1, 2), (4, 1)])

    def test_accola_maclachlan_merge(self):
        irreps = rational_irreps(build_group('AM:q=5'))
        self.assertIn((2, 4), [(w.d, w.m) for w in irreps])
        self.assertEqual(sum(w.d * w.m for w in irreps if w.d == 2), 18)

    def test_dicyclic_uses_index_one(self):
        irreps = rational_irreps(build_group('CqC4:q=5,rho=4'))
        self.assertEqual(sorted((w.d, w.m) for w in irreps), [(1, 1), (1, 1), (1, 2), (2, 2), (2, 2)])
        self.assertTrue(all(w.schur == SCHUR_INDEX == 1 for w in irreps))

    def test_cyclic_of_order_two(self):
        self.assertEqual(len(rational_irreps(build_group('C2'))), 2)

    def test_orbits_partition_the_table(self):
        group = build_group('C7xC3')
        irreps = rational_irreps(group)
        self.assertEqual(sum(w.m for w in irreps), len(char_table(group)))
        for w in irreps:
            self.assertEqual(w.n, w.d)
            for chi in w.constituents:
                self.assertEqual(character_field_degree(chi), w.m)

    def test_field_degree(self):
        psi = next(chi for chi in char_table(build_group('D5')) if chi.degree == 2)
        self.assertEqual(character_field_degree(psi), 2)


class CharacterSerializerTests(SimpleTestCase):

    def test_row(self):
        group = build_group('D5')
        data = CharacterRowSerializer(char_table(group)[0]).data
        self.assertEqual(len(data['values']), len(conjugacy_classes(group)))
        self.assertTrue(CharacterRowSerializer(data=data).is_valid())

    def test_rational_irrep(self):
        irreps = rational_irreps(build_group('D5'))
        data = RationalIrrepSerializer(irreps, many=True).data
        self.assertEqual(sorted(row['m'] for row in data), [1, 1, 2])
