import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from rest_framework.test import APIClient

from apps.default.exceptions import InvalidInputError
from apps.default.utils.rendering import render_json, render_table
from apps.jacobians.utils.moduli import moduli_fixed_dim
from apps.surfaces.managers.classifier import classify
from apps.surfaces.managers.pipeline import resolve_vectors
from apps.surfaces.serializers.surface_serializer import ClassificationReportSerializer, CurveModelSerializer
from apps.surfaces.utils.curve_models import TAGS, curve_model


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


class CurveModelTests(SimpleTestCase):

    def test_x4_for_five(self):
        model = curve_model('X4', 5)
        self.assertEqual(model.equation, 'y^5=(x-1)(x-i)^2(x+1)^4(x+i)^3')
        self.assertEqual(model.rho, 2)
        self.assertIn('phi(x) = -1/((x+i)(x+1))', model.automorphisms)
        self.assertEqual(model.genus, 4)

    def test_x4_for_thirteen(self):
        model = curve_model('X4', 13)
        self.assertEqual(model.rho, 5)
        self.assertEqual(model.equation, 'y^13=(x-1)(x-i)^5(x+1)^12(x+i)^8')
        self.assertIn('phi(x) = -1/((x+i)^3(x-i)(x+1)^4)', model.automorphisms)

    def test_rational_model(self):
        self.assertEqual(curve_model('X4Q', 5).equation, 'y^5=x(x+1)^2(x-1)^3')

    def test_isolated_models(self):
        self.assertEqual(curve_model('X8', 7).equation, 'y^2=x^14-1')
        self.assertEqual(curve_model('X3', 7).equation, 'y^3=x^7-1')
        self.assertFalse(curve_model('X8', 7).is_family)

    def test_families(self):
        c = curve_model('C', 7)
        self.assertEqual(c.tag, 'C_g')
        self.assertEqual(c.equation, 'y^2=(x^7-1)(x^7-t)')
        self.assertTrue(c.is_family)
        k = curve_model('K_g', 5)
        self.assertEqual(k.equation, 'y^5=(x-1)(x+1)^4(x-t)(x+t)^4')
        self.assertTrue(k.is_family)

    def test_symbolic_exponent(self):
        model = curve_model('X2', 7)
        self.assertEqual(model.equation, 'y^7=x^n_k(x^2-1)')
        self.assertEqual(dict(model.parameters), {'k': '1..2', 'n_k': '1..6, n_k != 5'})

    def test_x4_needs_one_mod_four(self):
        with self.assertRaises(InvalidInputError):
            curve_model('X4', 7)

    def test_invalid_input(self):
        for tag, q in (('X9', 7), ('X8', 6), ('X8', 3)):
            with self.subTest(tag=tag, q=q):
                with self.assertRaises(InvalidInputError):
                    curve_model(tag, q)

    def test_serializer(self):
        for tag in TAGS:
            q = 13 if tag.startswith('X4') else 7
            data = CurveModelSerializer(curve_model(tag, q)).data
            self.assertEqual(data['genus'], q - 1)
            self.assertTrue(CurveModelSerializer(data=data).is_valid())


class ClassificationTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.seven = classify(7)

    def test_realizable_lambdas(self):
        self.assertEqual(list(self.seven.realizable_lambdas), [1, 2, 3, 4, 8])
        self.assertEqual(self.seven.genus, 6)

    def test_strata_for_seven(self):
        self.assertEqual(self.seven.strata, {'X8': 1, 'X3': 1, 'X2k': 2, 'K': 2})

    def test_strata_for_thirteen(self):
        strata = classify(13).strata
        self.assertEqual(strata['K'], 4)
        self.assertEqual(strata['X4'], 1)
        self.assertEqual(strata['X2k'], 5)

    def test_pairs_are_tagged(self):
        tagged = {p.stratum for p in self.seven.pairs if p.stratum}
        self.assertEqual(tagged, {'X8', 'X3', 'X2k', 'K'})
        self.assertEqual(sorted({p.lam for p in self.seven.pairs}), [1, 2, 3, 4, 8])

    def test_tagged_orbits_have_fixed_locus(self):
        expected = {'X8': 0, 'X3': 0, 'X2k': 0, 'K': 3}
        for pair in self.seven.pairs:
            if not pair.stratum:
                continue
            found = pair.report.non_extendable if pair.stratum == 'X2k' else pair.report.orbits
            for orbit in found:
                with self.subTest(stratum=pair.stratum, group=pair.name):
                    self.assertEqual(moduli_fixed_dim(orbit.representative).n, expected[pair.stratum])

    def test_x8_group_has_abelian_complement(self):
        [pair] = [p for p in self.seven.pairs if p.stratum == 'X8']
        split = pair.report.group.split
        self.assertEqual(pair.report.group.spec_tag, 'AM:q=7')
        self.assertTrue(split.complement.is_abelian)

    def test_out_of_range(self):
        for q in (5, 6, 29):
            with self.subTest(q=q):
                with self.assertRaises(InvalidInputError):
                    classify(q)

    def test_serializer_round_trip(self):
        data = json.loads(render_json(ClassificationReportSerializer(self.seven).data))
        self.assertEqual(data['strata'], {'X8': 1, 'X3': 1, 'X2k': 2, 'K': 2})
        self.assertTrue(ClassificationReportSerializer(data=data).is_valid())


class PipelineTests(SimpleTestCase):

    def test_words(self):
        [v] = resolve_vectors('AM:q=5', '(0;2,4,10)', words=['z', 'z*x', 'x^-1'])
        self.assertEqual(v.periods, (2, 4, 10))

    def test_all_orbits(self):
        vectors = resolve_vectors('D7', '(0;2,2,7,7)', all_orbits=True)
        self.assertEqual(len(vectors), 2)

    def test_exactly_one_source(self):
        with self.assertRaises(InvalidInputError):
            resolve_vectors('D5', '(0;2,2,5,5)')
        with self.assertRaises(InvalidInputError):
            resolve_vectors('D5', '(0;2,2,5,5)', words=['s'], all_orbits=True)

    def test_several_groups(self):
        with self.assertRaises(InvalidInputError):
            resolve_vectors('all:lambda=2,q=7', '(0;2,2,7,7)', all_orbits=True)


class RenderingTests(SimpleTestCase):

    def test_json_is_sorted(self):
        self.assertEqual(render_json({'b': 1, 'a': [1, 2]}), '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n')

    def test_table(self):
        text = render_table([{'n': 1, 'tag': 'X8'}, {'n': 10, 'tag': None}], ['tag', 'n'])
        self.assertEqual(text.splitlines(), ['tag  n', '---  --', 'X8   1', '-    10'])


class CommandTests(SimpleTestCase):

    def test_curve_model(self):
        data = json.loads(run('curve_model', 'X4', '--q', '5', '--format', 'json'))
        self.assertEqual(data['equation'], 'y^5=(x-1)(x-i)^2(x+1)^4(x+i)^3')
        self.assertEqual(data['rho'], 2)
        self.assertIn('y^2=x^10-1', run('curve_model', 'X8', '--q', '5'))

    def test_deterministic_output(self):
        args = ('ns', '--group', 'D5', '--sigma', '(0;2,2,5,5)', '--all', '--format', 'json')
        self.assertEqual(run(*args), run(*args))

    def test_classify_rejects_composite(self):
        with self.assertRaises(CommandError) as ctx:
            run('classify', '--q', '6')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_classify_table(self):
        text = run('classify', '--q', '7')
        self.assertIn('λ realizables: 1, 2, 3, 4, 8', text)
        self.assertIn('estratos: X8:1 X3:1 X2k:2 K:2', text)

    def test_ns_for_accola_maclachlan(self):
        data = json.loads(run('ns', '--group', 'AM:q=5', '--sigma', '(0;2,4,10)', '--all', '--format', 'json'))
        self.assertTrue(data)
        self.assertTrue(all(report['n'] == 0 for report in data))
        self.assertEqual(data[0]['sym_sum_direct'], data[0]['sym_sum_conjugate_path'])

    def test_decompose_dihedral(self):
        data = json.loads(run(
            'decompose', '--group', 'D10', '--sigma', '(0;2,2,2,5)',
            '--words', 'r^5;s;s*r;r^4', '--format', 'json',
        ))
        [report] = data
        self.assertEqual(report['genus'], 4)
        nonzero = [(f['n'], f['dim_b']) for f in report['factors'] if not f['zero']]
        self.assertEqual(sum(n * dim_b for n, dim_b in nonzero), 4)

    def test_decompose_with_subgroup(self):
        [report] = json.loads(run(
            'decompose', '--group', 'AM:q=5', '--sigma', '(0;2,4,10)',
            '--words', 'z;z*x;x^-1', '--subgroup', 'z', '--format', 'json',
        ))
        self.assertIn('^2', report['description'])
        self.assertEqual([row['n_h'] for row in report['quotient'] if row['dim']], [1])

    def test_decompose_table(self):
        text = run('decompose', '--group', 'D5', '--sigma', '(0;2,2,5,5)', '--all')
        self.assertIn('D5 (0;2,2,5,5)', text)
        self.assertIn('dim_b', text)

    def test_invalid_vector(self):
        with self.assertRaises(CommandError) as ctx:
            run('ns', '--group', 'D5', '--sigma', '(0;2,2,5,5)', '--images', '0,0,0,0')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'x3.json'
            self.assertEqual(run('curve_model', 'X3', '--q', '7', '--format', 'json', '--out', str(path)), '')
            self.assertEqual(json.loads(path.read_text(encoding='utf-8'))['equation'], 'y^3=x^7-1')

    def test_period_matrix(self):
        data = json.loads(run('period_matrix', '--starts', '2', '--format', 'json'))
        self.assertEqual(data['locus_dimension'], 0)
        self.assertAlmostEqual(data['solution'][0][1][0], -0.381966, places=6)
        self.assertTrue(all(data['relations'].values()))


class SurfaceApiTests(SimpleTestCase):

    def setUp(self):
        self.client = APIClient()

    def post(self, action, payload):
        return self.client.post(f'/api/surfaces/{action}/', payload, format='json')

    def test_curve_model(self):
        response = self.post('curve_model', {'tag': 'X4', 'q': 13})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.data['rho'], 5)

    def test_curve_model_wrong_residue(self):
        response = self.post('curve_model', {'tag': 'X4', 'q': 7})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.data['code'], 'INVALID_INPUT')

    def test_classify_rejects_composite(self):
        response = self.post('classify', {'q': 9})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.data['code'], 'INVALID_INPUT')

    def test_ns(self):
        response = self.post('ns', {'group': 'AM:q=5', 'sigma': '(0;2,4,10)', 'all': True})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.data[0]['n'], 0)

    def test_decompose_quotient(self):
        response = self.post('decompose', {
            'group': 'AM:q=5', 'sigma': '(0;2,4,10)', 'words': ['z', 'z*x', 'x^-1'], 'subgroup': ['z'],
        })
        self.assertEqual(response.status_code, 200)
        self.assertIn('quotient', response.data[0])

    def test_missing_vector_source(self):
        response = self.post('ns', {'group': 'D5', 'sigma': '(0;2,2,5,5)'})
        self.assertEqual(response.status_code, 400)

    def test_unsupported_signature(self):
        response = self.post('ns', {'group': 'C5', 'sigma': '(1;5,5)', 'images': [1, 4]})
        self.assertEqual(response.status_code, 422)
        self.assertEqual(response.data['code'], 'UNSUPPORTED')
