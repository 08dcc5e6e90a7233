from django.core.cache import cache
from django.test import SimpleTestCase, override_settings

from quadforms.classgroup import (
    _reduced_indefinite_forms,
    ambiguous_classes,
    class_data,
    h_plus,
    opposite,
    schering_class_counts,
)
from quadforms.errors import BoundExceededError, InvalidDiscriminantError
from quadforms.forms_core import Form
from quadforms.reduction import cycle, is_gl2_equivalent, is_sl2_equivalent


class ClassNumberTests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def test_known_definite_class_numbers(self):
        known = {-3: 1, -4: 1, -12: 1, -20: 2, -23: 3, -47: 5, -56: 4, -71: 7, -84: 4}
        for d, h in known.items():
            self.assertEqual(h_plus(d), h, d)

    def test_known_indefinite_class_numbers(self):
        self.assertEqual(h_plus(5), 1)
        self.assertEqual(h_plus(8), 1)
        self.assertEqual(h_plus(13), 1)
        self.assertEqual(h_plus(20), 1)
        self.assertEqual(h_plus(21), 2)
        data = class_data(12)
        self.assertEqual((data.h_plus, data.h_ord, data.unit_norm), (2, 1, 1))

    def test_229(self):
        data = class_data(229)
        self.assertEqual(data.h_plus, 3)
        self.assertEqual(data.h_ord, 3)
        self.assertEqual(data.h_star, 2)
        self.assertEqual(data.unit_norm, -1)
        expected = [Form(1, -1, -57), Form(3, 13, -5), Form(9, 7, -5)]
        for rep in data.reps:
            self.assertEqual(sum(is_sl2_equivalent(rep, f) for f in expected), 1)

    def test_reps_are_pairwise_inequivalent(self):
        for d in (-84, -71, 229, 316, 145):
            reps = class_data(d).reps
            for i, f in enumerate(reps):
                for g in reps[i + 1 :]:
                    self.assertFalse(is_sl2_equivalent(f, g), (d, f, g))

    def test_cycles_partition_the_reduced_forms(self):
        for d in (13, 60, 229, 316):
            reps = class_data(d).reps
            self.assertEqual(
                sum(len(cycle(rep)) for rep in reps), len(_reduced_indefinite_forms(d))
            )

    def test_h_star_bounds(self):
        for d in (-84, -56, 12, 21, 60, 229, 316):
            data = class_data(d)
            self.assertGreaterEqual(data.h_star, max(1, data.h_plus // 2))
            self.assertLessEqual(data.h_star, data.h_plus)

    def test_h_plus_of_4d_for_five_mod_eight(self):
        for d in range(-595, 600, 8):
            if d in (-3,):
                continue
            small, large = h_plus(d), h_plus(4 * d)
            self.assertIn(large, (small, 3 * small), d)
            if d < 0:
                self.assertEqual(large, 3 * small, d)
        self.assertEqual(h_plus(-12), h_plus(-3))

    def test_cached(self):
        class_data(-23)
        self.assertIsNotNone(cache.get("quadforms:class_data:-23"))

    @override_settings(QF_CLASS_BOUND=100)
    def test_bound(self):
        with self.assertRaises(BoundExceededError):
            class_data(229)

    def test_rejects_bad_discriminants(self):
        with self.assertRaises(InvalidDiscriminantError):
            class_data(7)


class OppositeTests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def test_opposite(self):
        self.assertEqual(opposite(Form(3, 13, -5)), Form(3, -13, -5))
        self.assertTrue(is_gl2_equivalent(Form(3, 13, -5), opposite(Form(3, 13, -5))))

    def test_ambiguous_classes(self):
        self.assertEqual(ambiguous_classes(-3), (Form(1, 1, 1),))
        self.assertEqual(len(ambiguous_classes(229)), 1)


class ScheringCountTests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def test_counts(self):
        self.assertEqual(schering_class_counts(-3), (1, 1))
        self.assertEqual(schering_class_counts(5), (1, 1))
        self.assertEqual(schering_class_counts(2), (1, 0))
        self.assertEqual(schering_class_counts(37), (3, 1))
