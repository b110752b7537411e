#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import unittest
from unittest import mock

import sympy

from segrezeta.core.errors import NotStabilized, PreconditionViolation
from segrezeta.segre import snapper
from segrezeta.segre.snapper import M, N, snapper_fit
from test.segrezeta.helpers import ideal, ring


class SnapperTestCase(unittest.TestCase):

    def setUp(self):
        self.r = ring("x y z")


    def test_complete_intersection(self):
        fit = snapper_fit(ideal(self.r, "x^2", "y^2"), trials=2)
        self.assertEqual(0, sympy.expand(fit.polynomial - (2 * M**2 + 4 * M * N + 3 * M + N + 1)), "Snapper polynomial")
        self.assertEqual((2, 4, 0), fit.top_coefficients, "2m^2 + 4mn")
        self.assertEqual((4, 4, 0), fit.implied_degrees, "O(2)-degrees of the polar classes")
        self.assertTrue(fit.agrees, "matches the projective degrees (1, 2, 0)")
        self.assertEqual(2, fit.section_degree, "sections of O(2)")
        self.assertEqual(16, len(fit.grid), "4 x 4 grid")


    def test_linear(self):
        fit = snapper_fit(ideal(self.r, "x", "y"), trials=2)
        self.assertEqual(sympy.Rational(1, 2), fit.top_coefficients[0], "m^2 / 2")
        self.assertEqual(1, fit.top_coefficients[1], "mn")
        self.assertEqual((1, 1, 0), fit.implied_degrees, "projective degrees (1, 1, 0)")
        self.assertTrue(fit.agrees, "agrees")


    def test_principal(self):
        fit = snapper_fit(ideal(self.r, "x^2"), trials=2)
        self.assertEqual((4, 0, 0), fit.implied_degrees, "only the top polar class survives")
        self.assertTrue(fit.agrees, "agrees")


    def test_grid_too_small(self):
        with self.assertRaises(PreconditionViolation):
            snapper_fit(ideal(self.r, "x", "y"), points=3)
        with self.assertRaises(PreconditionViolation):
            snapper_fit(ideal(self.r, "x", "y"), n_start=0)


    def test_to_dict(self):
        payload = snapper_fit(ideal(self.r, "x", "y"), trials=1).to_dict()
        self.assertEqual(["1/2", "1", "0"], payload["top_coefficients"], "exact coefficients")
        self.assertEqual([1, 1, 0], payload["implied_degrees"], "implied degrees")
        self.assertTrue(payload["agrees"], "agrees")


    def test_enlarged_grid(self):
        fit = snapper._fit
        calls = []

        def first_fails(grid, ambient):
            calls.append(min(m for m, _ in grid))
            return None if len(calls) == 1 else fit(grid, ambient)

        with mock.patch("segrezeta.segre.snapper._fit", side_effect=first_fails):
            result = snapper_fit(ideal(self.r, "x^2", "y^2"), m_start=0, trials=2)
        self.assertEqual([0, 1], calls, "m = 0 moves to m = 1")
        self.assertEqual((1, 2, 3, 4), result.m_values, "enlarged m values")
        self.assertEqual((2, 3, 4, 5), result.n_values, "doubled n values")
        self.assertEqual((4, 4, 0), result.implied_degrees, "same degrees on the enlarged grid")
        with mock.patch("segrezeta.segre.snapper._fit", return_value=None):
            with self.assertRaises(NotStabilized):
                snapper_fit(ideal(self.r, "x", "y"), trials=2)
