#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import unittest

import sympy

from segrezeta.arith.monomial import monomials_of_degree
from segrezeta.core.errors import PreconditionViolation
from segrezeta.groebner.operations import ideal_equal
from segrezeta.integral.closure import element_integral_monomial, monomial_closure_oracle
from test.segrezeta.helpers import ideal, ring

HALF = sympy.Rational(1, 2)


class ClosureTestCase(unittest.TestCase):

    def setUp(self):
        self.r = ring("x y z")


    def test_squares(self):
        r = self.r
        closure = monomial_closure_oracle(ideal(r, "x^2", "y^2"))
        self.assertTrue(ideal_equal(ideal(r, "x^2", "x*y", "y^2"), closure.ideal), "xy added")
        self.assertEqual((HALF, HALF), closure.certificates["x*y"], "xy = (x^2)^(1/2) (y^2)^(1/2)")


    def test_cubes(self):
        r = self.r
        closure = monomial_closure_oracle(ideal(r, "x^3", "y^3"))
        self.assertTrue(ideal_equal(ideal(r, "x^3", "x^2*y", "x*y^2", "y^3"), closure.ideal), "x^2y and xy^2 added")
        self.assertEqual((sympy.Rational(2, 3), sympy.Rational(1, 3)), closure.certificates["x^2*y"], "2/3 and 1/3")


    def test_integrally_closed(self):
        r = self.r
        for texts in (["x", "y"], ["x", "y", "z"], ["x^2", "x*y", "y^2"], ["x*y", "z^2"]):
            i = ideal(r, *texts)
            self.assertTrue(ideal_equal(i, monomial_closure_oracle(i).ideal), "already closed: " + str(texts))


    def test_element(self):
        r = self.r
        i = ideal(r, "x^2", "y^3")
        self.assertIsNotNone(element_integral_monomial(i, (1, 2, 0)), "xy^2")
        self.assertIsNone(element_integral_monomial(i, (1, 1, 0)), "xy")
        self.assertIsNone(element_integral_monomial(i, (0, 0, 5)), "z^5")
        self.assertEqual((1, 0), element_integral_monomial(i, (3, 0, 1)), "multiple of x^2")


    def test_points_outside(self):
        r = self.r
        line = ideal(r, "x", "y")
        for k in range(1, 5):
            self.assertIsNone(element_integral_monomial(line, (0, 0, k)), "z^" + str(k) + " not over (x, y)")
        self.assertTrue(ideal_equal(line, monomial_closure_oracle(line).ideal), "z is not added to (x, y)")
        i = ideal(r, "x^2", "y^3")
        for v in ((0, 0, 5), (1, 1, 3), (0, 2, 4), (1, 0, 0)):
            self.assertIsNone(element_integral_monomial(i, v), str(v) + " outside")


    def test_certificates_hold(self):
        r = self.r
        i = ideal(r, "x^3", "x*y", "y^4", "z^2")
        vertices = [g.leading_monomial() for g in i.generators]
        for v in monomials_of_degree(3, 4):
            weights = element_integral_monomial(i, v)
            if weights is None:
                continue
            self.assertTrue(all(w >= 0 for w in weights), "nonnegative weights for " + str(v))
            self.assertEqual(1, sum(weights), "weights sum to 1 for " + str(v))
            for j in range(3):
                self.assertLessEqual(sum(w * e[j] for w, e in zip(weights, vertices)), v[j], str(v) + " dominates")


    def test_not_monomial(self):
        with self.assertRaises(PreconditionViolation):
            monomial_closure_oracle(ideal(self.r, "x^2 + y^2"))
