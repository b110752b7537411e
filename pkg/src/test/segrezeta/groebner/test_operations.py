#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import unittest

import numpy as np

from segrezeta.core.errors import PreconditionViolation, RingMismatch
from segrezeta.groebner.ideal import Ideal
from segrezeta.groebner.operations import (eliminate, graded_dim, ideal_equal, ideal_power, ideal_product, ideal_quotient,
                                           ideal_sum, intersect, irrelevant_ideal, is_subideal, saturate_by_ideal,
                                           saturate_by_poly, saturate_irrelevant)
from test.segrezeta.helpers import corpus, ideal, poly, ring


class OperationsTestCase(unittest.TestCase):

    def setUp(self):
        self.r = ring("x y z")


    def test_quotient(self):
        r = self.r
        self.assertTrue(ideal_equal(ideal(r, "x"), ideal_quotient(ideal(r, "x^2"), poly(r, "x"))), "(x^2) : x")
        self.assertTrue(ideal_equal(ideal(r, "x", "y"), ideal_quotient(ideal(r, "x*y", "y^2"), poly(r, "y"))), "(xy, y^2) : y")
        self.assertTrue(ideal_equal(ideal(r, "x", "y"), ideal_quotient(ideal(r, "x^2", "y^2"), poly(r, "x*y"))), "(x^2, y^2) : xy")


    def test_quotient_by_form(self):
        r = self.r
        i = ideal(r, "x^2 + x*y", "x*y + y^2")
        self.assertTrue(ideal_equal(ideal(r, "x", "y"), ideal_quotient(i, poly(r, "x + y"))), "common factor x + y")
        self.assertTrue(ideal_equal(i, ideal_quotient(i, poly(r, "z"))), "z is a nonzerodivisor")


    def test_quotient_by_zero(self):
        with self.assertRaises(PreconditionViolation):
            ideal_quotient(ideal(self.r, "x"), self.r.zero())


    def test_saturate_by_poly(self):
        r = self.r
        i = ideal(r, "x^2*y", "x*y^2")
        for method in ("quotient", "elimination"):
            self.assertTrue(ideal_equal(ideal(r, "x"), saturate_by_poly(i, poly(r, "y"), method)), "y-saturation, " + method)
            self.assertTrue(saturate_by_poly(ideal(r, "x"), poly(r, "x"), method).is_unit(), "(x) : x^infinity, " + method)
            self.assertTrue(ideal_equal(i, saturate_by_poly(i, r.one(), method)), "saturation by 1, " + method)


    def test_saturation_methods_agree(self):
        r = self.r
        i = ideal(r, "x^2*z - y^2*z", "x*y*z + z^3", "x^3")
        f = poly(r, "x + z")
        self.assertTrue(ideal_equal(saturate_by_poly(i, f, "quotient"), saturate_by_poly(i, f, "elimination")),
                        "quotient and elimination")


    def test_saturation_idempotent(self):
        r = self.r
        rng = np.random.default_rng(5)
        monomials = ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]
        for _ in range(10):
            chosen = rng.choice(len(monomials), size=2, replace=False)
            texts = [str(int(rng.integers(1, 100))) + "*" + monomials[chosen[0]] + " + " + monomials[chosen[1]],
                     "x*" + monomials[int(rng.integers(0, 6))]]
            i = ideal(r, *texts)
            f = poly(r, "x")
            once = saturate_by_poly(i, f)
            self.assertTrue(ideal_equal(once, saturate_by_poly(once, f)), "idempotence for " + str(i))
            self.assertTrue(is_subideal(i, once), "saturation contains the ideal")


    def test_saturate_by_ideal(self):
        r = self.r
        self.assertTrue(ideal_equal(ideal(r, "z"), saturate_by_ideal(ideal(r, "x*z", "y*z"), ideal(r, "x", "y"))),
                        "V(x, y) removed, V(z) kept")
        i = ideal(r, "x^2", "y^2")
        self.assertTrue(ideal_equal(i, saturate_by_ideal(i, Ideal.unit(r))), "saturation by (1)")
        self.assertTrue(saturate_by_ideal(i, i).is_unit(), "saturation by itself")
        with self.assertRaises(PreconditionViolation):
            saturate_by_ideal(i, Ideal.zero(r))


    def test_residual_step(self):
        r = self.r
        i = ideal(r, "x^2", "y^2")
        cut = ideal(r, "3*x^2 + 5*y^2", "7*x^2 - 2*y^2")
        self.assertTrue(saturate_by_ideal(cut, i).is_unit(), "two conics meeting only in V(x^2, y^2)")
        one = ideal(r, "3*x^2 + 5*y^2")
        self.assertTrue(ideal_equal(one, saturate_by_ideal(one, i)), "a single conic has no component in V(x^2, y^2)")


    def test_saturate_irrelevant(self):
        r = self.r
        square = ideal_power(ideal(r, "x^2", "y^2"), 2)
        self.assertTrue(ideal_equal(square, saturate_irrelevant(square)), "complete intersection power is saturated")
        self.assertTrue(saturate_irrelevant(irrelevant_ideal(r)).is_unit(), "irrelevant ideal")
        mixed = ideal(r, "x^2", "x*y", "x*z")
        self.assertTrue(ideal_equal(ideal(r, "x"), saturate_irrelevant(mixed)), "embedded point removed")


    def test_product_and_power(self):
        r = self.r
        self.assertTrue(ideal_equal(ideal(r, "x^2", "x*y", "y^2"), ideal_power(ideal(r, "x", "y"), 2)), "(x, y)^2")
        product = ideal_product(ideal(r, "x^2", "y^2"), ideal(r, "x^2", "x*y", "y^2"))
        self.assertTrue(ideal_equal(ideal_power(ideal(r, "x", "y"), 4), product), "(x^2, y^2)(x, y)^2 = (x, y)^4")
        i = ideal(r, "x^2 + y*z", "z^2")
        self.assertTrue(ideal_equal(i, ideal_product(i, Ideal.unit(r))), "I * (1)")
        with self.assertRaises(PreconditionViolation):
            ideal_power(i, 0)


    def test_sum(self):
        r = self.r
        self.assertTrue(ideal_equal(ideal(r, "x", "y"), ideal_sum(ideal(r, "x"), ideal(r, "y"))), "(x) + (y)")
        with self.assertRaises(RingMismatch):
            ideal_sum(ideal(r, "x"), ideal(ring("x y"), "y"))


    def test_subideal(self):
        r = self.r
        self.assertTrue(ideal_equal(ideal(r, "x^2", "x*y", "y^2"), ideal_power(ideal(r, "x", "y"), 2)), "equal")
        self.assertTrue(is_subideal(ideal(r, "x^2", "y^2"), ideal(r, "x", "y")), "(x^2, y^2) in (x, y)")
        self.assertFalse(is_subideal(ideal(r, "x", "y"), ideal(r, "x^2", "y^2")), "(x, y) not in (x^2, y^2)")


    def test_intersect(self):
        r = self.r
        self.assertTrue(ideal_equal(ideal(r, "x*y"), intersect(ideal(r, "x"), ideal(r, "y"))), "(x) and (y)")
        self.assertTrue(ideal_equal(ideal(r, "x^2", "x*y"), intersect(ideal(r, "x"), ideal(r, "x^2", "y"))), "(x) and (x^2, y)")
        self.assertTrue(intersect(ideal(r, "x"), Ideal.zero(r)).is_zero(), "with (0)")


    def test_eliminate(self):
        r = self.r
        cubic = eliminate(ideal(r, "y - x^2", "z - x^3"), ["y", "z"])
        self.assertTrue(ideal_equal(ideal(r, "y^3 - z^2"), cubic), "cuspidal cubic")
        i = ideal(r, "x^2 + y*z", "x*y")
        self.assertTrue(ideal_equal(i, eliminate(i, ["x", "y", "z"])), "keeping all variables")
        s = ring("t x")
        self.assertTrue(eliminate(ideal(s, "t*x - 1"), ["x"]).is_zero(), "no relation survives")


    def test_eliminate_contained(self):
        r = self.r
        examples = corpus()
        examples.append(("cuspidal cubic", ideal(r, "y - x^2", "z - x^3")))
        for name, i in examples:
            variables = i.ring.variables
            for keep in (variables[1:], variables[:2], variables[-1:]):
                e = eliminate(i, keep)
                self.assertTrue(is_subideal(e, i), "eliminating from " + name + " keeps a subideal")
                dropped = [j for j, v in enumerate(variables) if v not in keep]
                for g in e.generators:
                    self.assertTrue(all(exps[j] == 0 for exps, _ in g.items() for j in dropped),
                                    str(g) + " only uses " + str(keep))


    def test_graded_dim(self):
        r = self.r
        self.assertEqual(3, graded_dim(ideal(r, "x", "y", "z"), 1), "linear forms")
        self.assertEqual(2, graded_dim(ideal(r, "x^2", "y^2"), 2), "x^2 and y^2 span")
        self.assertEqual(0, graded_dim(ideal(r, "x^2", "y^2"), 1), "nothing below the generators")
        square = ideal_power(ideal(r, "x^2", "y^2"), 2)
        self.assertEqual(graded_dim(square, 8), graded_dim(saturate_irrelevant(square), 8), "saturated already")
        # all 45 octics but the 12 standard monomials x^a y^b z^c with a, b < 4 and not in (x^2, y^2)^2
        self.assertEqual(45 - 12, graded_dim(square, 8), "brute force count")
