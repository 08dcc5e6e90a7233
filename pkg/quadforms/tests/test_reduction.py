import random

from django.test import SimpleTestCase, override_settings

from quadforms.errors import (
    ImprimitiveFormError,
    InvalidDiscriminantError,
    PeriodLimitError,
    SquareDiscriminantError,
    ZeroFormError,
)
from quadforms.forms_core import Form, UnimodularMatrix
from quadforms.reduction import (
    _cycle_from_reduced,
    automorph,
    cycle,
    gl2_transform,
    is_contained,
    is_gl2_equivalent,
    is_reduced_indefinite,
    is_sl2_equivalent,
    reduce,
    reduce_tracked,
    rho,
    sl2_transform,
    sublattice_bases,
)

from .utils import random_unimodular


class DefiniteReductionTests(SimpleTestCase):
    def test_reduced_forms_are_fixed(self):
        for f in [Form(1, 1, 1), Form(1, 0, 3), Form(2, 1, 3), Form(3, 2, 5)]:
            self.assertEqual(reduce(f), f)

    def test_reduce(self):
        self.assertEqual(reduce(Form(4, 2, 1)), Form(1, 0, 3))
        self.assertEqual(reduce(Form(3, 3, 1)), Form(1, 1, 1))

    def test_negative_definite(self):
        self.assertEqual(reduce(Form(-4, -2, -1)), Form(-1, 0, -3))

    def test_tracked_matrix(self):
        rng = random.Random(5)
        for f in [Form(1, 1, 1), Form(2, 1, 3), Form(-3, 2, -5)]:
            for _ in range(20):
                g = f.act(random_unimodular(rng))
                reduced, m = reduce_tracked(g)
                self.assertEqual(g.act(m), reduced)
                self.assertEqual(m.determinant, 1)
                self.assertEqual(reduced, reduce(f))

    def test_zero_and_square(self):
        with self.assertRaises(ZeroFormError):
            reduce(Form(0, 0, 0))
        with self.assertRaises(SquareDiscriminantError):
            reduce(Form(1, 3, 2))


class IndefiniteReductionTests(SimpleTestCase):
    def test_is_reduced(self):
        self.assertTrue(is_reduced_indefinite(Form(1, 1, -1)))
        self.assertTrue(is_reduced_indefinite(Form(-1, 1, 1)))
        self.assertFalse(is_reduced_indefinite(Form(1, -1, -57)))

    def test_rho_preserves_discriminant(self):
        f = Form(3, 13, -5)
        for _ in range(10):
            g = rho(f)
            self.assertEqual(g.discriminant, f.discriminant)
            self.assertEqual(g.a, f.c)
            f = g

    def test_golden_cycle(self):
        c = cycle(Form(1, 1, -1))
        self.assertEqual(set(c), {Form(1, 1, -1), Form(-1, 1, 1)})
        self.assertEqual(len(c), 2)

    def test_cycle_is_shared_by_the_class(self):
        rng = random.Random(13)
        f = Form(3, 13, -5)
        base = set(cycle(f))
        for _ in range(20):
            g = f.act(random_unimodular(rng))
            self.assertEqual(set(cycle(g)), base)
            self.assertIn(reduce(g), base)

    def test_cycle_members_are_reduced(self):
        for form in cycle(Form(1, -1, -57)):
            self.assertTrue(is_reduced_indefinite(form))

    def test_cycle_rejects_definite(self):
        with self.assertRaises(InvalidDiscriminantError):
            cycle(Form(1, 1, 1))

    def test_cycle_cap(self):
        _cycle_from_reduced.cache_clear()
        with override_settings(QF_PERIOD_CAP=3):
            with self.assertRaises(PeriodLimitError):
                cycle(Form(3, 13, -5))
        _cycle_from_reduced.cache_clear()


class EquivalenceTests(SimpleTestCase):
    def test_opposite_classes_at_229(self):
        f, g = Form(3, 13, -5), Form(9, 7, -5)
        self.assertFalse(is_sl2_equivalent(f, g))
        self.assertTrue(is_gl2_equivalent(f, g))

    def test_inequivalent(self):
        self.assertFalse(is_gl2_equivalent(Form(1, -1, -57), Form(3, 13, -5)))
        self.assertFalse(is_gl2_equivalent(Form(1, 1, 1), Form(1, 0, 3)))
        self.assertFalse(is_sl2_equivalent(Form(1, 1, 1), Form(2, 2, 2)))

    def test_negation_in_golden_cycle(self):
        self.assertTrue(is_sl2_equivalent(Form(1, 1, -1), Form(-1, 1, 1)))

    def test_random_transforms(self):
        rng = random.Random(17)
        forms = [Form(1, 1, -1), Form(3, 13, -5), Form(2, 1, 3), Form(4, 2, -3), Form(6, 2, 10)]
        for f in forms:
            for _ in range(15):
                proper = random_unimodular(rng)
                g = f.act(proper)
                self.assertTrue(is_sl2_equivalent(f, g))
                m = sl2_transform(f, g)
                self.assertEqual(m.determinant, 1)
                self.assertEqual(f.act(m), g)

                improper = random_unimodular(rng, determinant=-1)
                h = f.act(improper)
                self.assertTrue(is_gl2_equivalent(f, h))
                self.assertEqual(f.act(gl2_transform(f, h)), h)

    def test_transform_none_when_inequivalent(self):
        self.assertIsNone(sl2_transform(Form(3, 13, -5), Form(9, 7, -5)))
        self.assertIsNone(gl2_transform(Form(1, -1, -57), Form(3, 13, -5)))


class AutomorphTests(SimpleTestCase):
    def test_golden_automorph(self):
        m = automorph(Form(1, 1, -1))
        self.assertEqual(m, UnimodularMatrix(1, 1, 1, 2))
        for k in range(1, 6):
            self.assertEqual(Form(1, 1, -1).act(m.power(k)), Form(1, 1, -1))

    def test_automorph_at_229(self):
        f = Form(1, 1, -57)
        m = automorph(f)
        self.assertEqual(m, UnimodularMatrix(106, 855, 15, 121))
        self.assertEqual(f.act(m), f)
        self.assertEqual(m.order_mod(2), 3)

    def test_automorph_fixes_class_representatives(self):
        for f in [Form(3, 13, -5), Form(9, 7, -5), Form(1, 4, -1), Form(2, 6, -3)]:
            m = automorph(f)
            self.assertEqual(m.determinant, 1)
            self.assertEqual(f.act(m), f)

    def test_automorph_preconditions(self):
        with self.assertRaises(InvalidDiscriminantError):
            automorph(Form(1, 1, 1))
        with self.assertRaises(ImprimitiveFormError):
            automorph(Form(2, 2, -2))


class ContainmentTests(SimpleTestCase):
    def test_sublattice_count(self):
        # sigma(k) sublattices of index k
        self.assertEqual(len(sublattice_bases(1)), 1)
        self.assertEqual(len(sublattice_bases(2)), 3)
        self.assertEqual(len(sublattice_bases(4)), 7)
        for basis in sublattice_bases(6):
            self.assertEqual(basis.determinant, 6)

    def test_dag_is_contained(self):
        self.assertTrue(is_contained(Form(4, 2, 1), Form(1, 1, 1)))
        self.assertTrue(is_contained(Form(1, 0, 3), Form(1, 1, 1)))
        self.assertTrue(is_contained(Form(1, 2, -4), Form(1, 1, -1)))

    def test_not_contained(self):
        self.assertFalse(is_contained(Form(1, 1, 1), Form(1, 0, 3)))
        self.assertFalse(is_contained(Form(1, 1, -57), Form(1, 1, 1)))
        self.assertFalse(is_contained(Form(1, 0, -10), Form(1, 1, -1)))
