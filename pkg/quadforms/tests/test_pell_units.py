import math

from django.core.cache import cache
from django.test import SimpleTestCase, override_settings

from quadforms.classgroup import class_data
from quadforms.errors import (
    InvalidDiscriminantError,
    PeriodLimitError,
    SquareDiscriminantError,
)
from quadforms.forms_core import is_square_discriminant
from quadforms.pell_units import (
    FundamentalUnit,
    fundamental_unit,
    in_order_4d,
    norm_transfer_check,
    pell4,
    rebase,
    unit_parity_criterion,
    unit_power,
    unit_residues,
)


def real_discriminants(limit, residue=None, modulus=None):
    for d in range(5, limit + 1):
        if d % 4 not in (0, 1) or is_square_discriminant(d):
            continue
        if residue is not None and d % modulus != residue:
            continue
        yield d


class FundamentalUnitTests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def test_known_units(self):
        self.assertEqual(fundamental_unit(5), FundamentalUnit(5, 0, 1, -1))
        self.assertEqual(fundamental_unit(8), FundamentalUnit(8, 1, 1, -1))
        self.assertEqual(fundamental_unit(12), FundamentalUnit(12, 2, 1, 1))
        self.assertEqual(fundamental_unit(37), FundamentalUnit(37, 5, 2, -1))
        self.assertEqual(fundamental_unit(229), FundamentalUnit(229, 7, 1, -1))

    def test_norm_matches_exact_norm(self):
        for d in real_discriminants(500):
            unit = fundamental_unit(d)
            self.assertEqual(unit.exact_norm(), unit.norm, d)
            self.assertIn(unit.norm, (1, -1))

    def test_minimality_against_exhaustive_search(self):
        for d in real_discriminants(200):
            u = 0
            while True:
                u += 1
                # t^2 - du^2 = -4 is tried first at each u
                s = math.isqrt(d * u * u - 4)
                if s * s == d * u * u - 4:
                    norm = -1
                    break
                t = math.isqrt(d * u * u + 4)
                if t * t == d * u * u + 4:
                    norm = 1
                    break
            unit = fundamental_unit(d)
            self.assertEqual(unit.norm, norm, d)
            if norm == -1:
                self.assertEqual(unit.y, u, d)
            else:
                self.assertEqual(pell4(d), (t, u), d)

    def test_cached(self):
        fundamental_unit(229)
        self.assertEqual(cache.get("quadforms:unit:229"), FundamentalUnit(229, 7, 1, -1))

    def test_rejects_bad_discriminants(self):
        with self.assertRaises(InvalidDiscriminantError):
            fundamental_unit(-3)
        with self.assertRaises(InvalidDiscriminantError):
            fundamental_unit(7)
        with self.assertRaises(SquareDiscriminantError):
            fundamental_unit(9)

    @override_settings(QF_PERIOD_CAP=1)
    def test_period_cap(self):
        with self.assertRaises(PeriodLimitError):
            fundamental_unit(37)


class Pell4Tests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def test_known_solutions(self):
        self.assertEqual(pell4(5), (3, 1))
        self.assertEqual(pell4(8), (6, 2))
        self.assertEqual(pell4(229), (227, 15))

    def test_solves_the_equation(self):
        for d in real_discriminants(400):
            t, u = pell4(d)
            self.assertEqual(t * t - d * u * u, 4, d)
            self.assertGreater(u, 0)


class ResidueTests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def test_unit_residues_match_the_unit(self):
        for d in real_discriminants(300):
            unit = fundamental_unit(d)
            for m in (2, 3, 7):
                self.assertEqual(
                    unit_residues(d, m), (unit.x % m, unit.y % m, unit.norm), (d, m)
                )

    def test_modulus_must_be_at_least_two(self):
        with self.assertRaises(ValueError):
            unit_residues(5, 1)


class ParityCriterionTests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def test_examples(self):
        self.assertTrue(unit_parity_criterion(229))
        self.assertTrue(unit_parity_criterion(5))
        self.assertFalse(unit_parity_criterion(37))
        self.assertTrue(unit_parity_criterion(-3))
        self.assertFalse(unit_parity_criterion(-11))

    def test_requires_five_mod_eight(self):
        with self.assertRaises(InvalidDiscriminantError):
            unit_parity_criterion(17)

    def test_rebase_keeps_parity(self):
        for d in real_discriminants(500, residue=5, modulus=8):
            unit = fundamental_unit(d)
            for sign in (1, -1):
                for shift in range(-3, 4):
                    _, y = rebase(unit, sign, shift)
                    self.assertEqual(y % 2, unit.y % 2)

    def test_rebase_rejects_bad_sign(self):
        with self.assertRaises(ValueError):
            rebase(fundamental_unit(5), 0, 1)

    def test_cube_lies_in_the_suborder(self):
        for d in real_discriminants(300, residue=1, modulus=4):
            x, y = unit_power(fundamental_unit(d), 3)
            self.assertTrue(in_order_4d(x, y), d)

    def test_unit_power(self):
        unit = fundamental_unit(5)
        # omega^2 = omega + 1
        self.assertEqual(unit_power(unit, 0), (1, 0))
        self.assertEqual(unit_power(unit, 2), (1, 1))
        self.assertEqual(unit_power(unit, 3), (1, 2))


class NormTransferTests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def test_norm_is_shared_with_the_suborder(self):
        for d in real_discriminants(500, residue=1, modulus=4):
            self.assertTrue(norm_transfer_check(d), d)

    def test_requires_one_mod_four(self):
        with self.assertRaises(InvalidDiscriminantError):
            norm_transfer_check(8)

    def test_negative_norm_iff_h_equals_h_plus(self):
        for d in real_discriminants(300):
            data = class_data(d)
            self.assertEqual(fundamental_unit(d).norm == -1, data.h_plus == data.h_ord, d)
