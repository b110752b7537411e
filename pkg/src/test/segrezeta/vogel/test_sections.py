#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import unittest

from segrezeta.core.errors import PreconditionViolation
from segrezeta.groebner.ideal import Ideal
from segrezeta.vogel.sections import make_sections, random_generator, spanning_sections
from test.segrezeta.helpers import ideal, ring


class SectionsTestCase(unittest.TestCase):

    def setUp(self):
        self.r = ring("x y z")


    def test_linear(self):
        i = ideal(self.r, "x", "y")
        sections = make_sections(i, 0)
        self.assertEqual(1, sections.degree, "no normalization needed")
        self.assertEqual(2, len(sections.sections), "one section per codimension")
        for s in sections.sections:
            self.assertEqual(1, s.degree(), "linear sections")
            self.assertTrue(i.contains(s), "sections lie in the ideal")


    def test_normalization(self):
        i = ideal(self.r, "x^2", "y")
        spanning = spanning_sections(i, 2)
        self.assertEqual(4, len(spanning), "x^2 plus y times every variable")
        self.assertTrue(all(f.degree() == 2 for f in spanning), "common degree")
        sections = make_sections(i, 7)
        self.assertEqual(2, sections.degree, "largest generator degree")
        for s in sections.sections:
            self.assertTrue(s.is_homogeneous() and s.degree() == 2, "quadrics")
            self.assertTrue(i.contains(s), "sections lie in the ideal")


    def test_scalars(self):
        i = ideal(self.r, "x^2", "y^2")
        sections = make_sections(i, 3)
        p = self.r.field.modulus
        self.assertEqual(2, len(sections.scalar_matrix), "rows")
        for row in sections.scalar_matrix:
            self.assertEqual(2, len(row), "one scalar per generator")
            self.assertTrue(all(1 <= u < p for u in row), "nonzero scalars")


    def test_seeded(self):
        i = ideal(self.r, "x^2", "x*y", "y^2")
        first = make_sections(i, 11, rng=random_generator(11, 2))
        second = make_sections(i, 11, rng=random_generator(11, 2))
        other = make_sections(i, 11, rng=random_generator(11, 3))
        self.assertEqual(first.sections, second.sections, "same seed and trial")
        self.assertNotEqual(first.scalar_matrix, other.scalar_matrix, "different trial")


    def test_forced_degree(self):
        i = ideal(self.r, "x", "y")
        sections = make_sections(i, 0, degree=2)
        self.assertEqual(2, sections.degree, "forced degree")
        self.assertEqual(6, len(sections.spanning), "x and y times every variable")
        with self.assertRaises(PreconditionViolation):
            make_sections(ideal(self.r, "x^2"), 0, degree=1)


    def test_preconditions(self):
        with self.assertRaises(PreconditionViolation):
            make_sections(Ideal.zero(self.r), 0)
        with self.assertRaises(PreconditionViolation):
            make_sections(Ideal.unit(self.r), 0)
