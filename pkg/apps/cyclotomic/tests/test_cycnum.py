import random
from fractions import Fraction

from django.test import SimpleTestCase

from apps.cyclotomic.models import CycNum
from apps.default.exceptions import InvalidInputError


def z(n, k=1):
    return CycNum.zeta(n, k)


def sample(rng, n):
    exponents = {rng.randrange(n): rng.randint(-3, 3) for _ in range(4)}
    return CycNum.from_exponents(n, exponents, den=rng.choice([1, 2, 3]))


class ArithmeticTests(SimpleTestCase):

    def test_primitive_root_sum(self):
        self.assertEqual(z(5) + z(5, 2) + z(5, 3) + z(5, 4), -1)

    def test_fourth_root_squared(self):
        self.assertEqual(z(4) * z(4), -1)

    def test_mobius_sum(self):
        units = [t for t in range(15) if t % 3 and t % 5]
        self.assertEqual(CycNum.from_exponents(15, units), 1)

    def test_mixed_conductors(self):
        # ζ_4 = ζ_20^5
        self.assertEqual(z(4) * z(5), z(20, 9))
        self.assertEqual(z(4) + z(5) - z(4), z(5))

    def test_rationals(self):
        half = CycNum.rational(5, Fraction(1, 2))
        self.assertEqual(half + half, 1)
        self.assertEqual(z(5) * Fraction(2, 3) * 3, z(5) * 2)
        self.assertEqual((z(5) / 2) * 2, z(5))

    def test_field_axioms(self):
        rng = random.Random(7)
        for n in (4, 5, 10, 15, 20, 46):
            for _ in range(5):
                a, b, c = sample(rng, n), sample(rng, n), sample(rng, n)
                with self.subTest(n=n, a=a.text):
                    self.assertEqual((a * b) * c, a * (b * c))
                    self.assertEqual(a * (b + c), a * b + a * c)
                    self.assertEqual((a + b) - b, a)

    def test_inverse(self):
        rng = random.Random(11)
        for n in (5, 12, 15):
            a = sample(rng, n)
            if a.is_zero():
                continue
            self.assertEqual(a * a.inverse(), 1)
        with self.assertRaises(ZeroDivisionError):
            CycNum.rational(5, 0).inverse()

    def test_complex_embedding_is_ring_homomorphism(self):
        rng = random.Random(3)
        for n in (5, 10, 20):
            a, b = sample(rng, n), sample(rng, n)
            self.assertAlmostEqual((a * b).to_complex(), a.to_complex() * b.to_complex(), delta=1e-12)
            self.assertAlmostEqual((a + b).to_complex(), a.to_complex() + b.to_complex(), delta=1e-12)
            self.assertGreaterEqual((a * a.conj()).to_complex().real, -1e-12)


class GaloisTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(z(5).galois(2), z(5, 2))
        a = z(5) + z(5, 4)
        self.assertEqual(a.galois(1), a)
        self.assertEqual(a.galois(2), z(5, 2) + z(5, 3))

    def test_composition(self):
        a = z(15) + 2 * z(15, 4)
        for k in (2, 4, 7):
            for kk in (8, 11, 13):
                self.assertEqual(a.galois(k).galois(kk), a.galois(k * kk % 15))

    def test_not_a_unit(self):
        with self.assertRaises(InvalidInputError):
            z(10).galois(5)

    def test_conjugate_and_projections(self):
        self.assertEqual(z(5).conj(), z(5, 4))
        self.assertEqual((z(5) + z(5, 2) + z(5, 3) + z(5, 4)).rational_part(), -1)
        self.assertIsNone(z(5).rational_part())
        self.assertAlmostEqual(z(4).to_complex(), 1j, delta=1e-15)


class TextTests(SimpleTestCase):

    def test_parse_inverts_text(self):
        a = z(5) * Fraction(1, 2) - 3
        self.assertEqual(CycNum.parse(a.text), a)

    def test_render(self):
        self.assertEqual(z(4).render(), '0+1i')
        self.assertEqual(CycNum.rational(3, -2).render(), '-2')

    def test_malformed(self):
        for text in ['cyc(5)[1,2]', 'ciclo(5)[1,0,0,0]']:
            with self.assertRaises(InvalidInputError):
                CycNum.parse(text)
