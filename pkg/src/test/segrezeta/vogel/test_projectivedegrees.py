#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import unittest
from unittest import mock

from segrezeta.core.errors import GenericityFailure
from segrezeta.cycles.cycleclass import CycleClass
from segrezeta.vogel.projectivedegrees import projective_degrees, telescoping_holds, vogel_degrees
from segrezeta.vogel.residualchain import residual_chain
from segrezeta.vogel.sections import GenericSections, make_sections
from segrezeta.vogel.vogeldata import ProjectiveDegrees
from test.segrezeta.helpers import corpus, ideal, poly, ring


class MockRun:
    """a residual chain run that only knows its projective degrees"""

    def __init__(self, g):
        self.g = ProjectiveDegrees(g, 2, 1, 0)
        self.section_degree = 2


class ProjectiveDegreesTestCase(unittest.TestCase):

    def setUp(self):
        self.r = ring("x y z")


    def test_linear(self):
        g = projective_degrees(ideal(self.r, "x", "y"), trials=3)
        self.assertEqual((1, 1, 0), g.g, "projection from a point")
        self.assertEqual(1, g.section_degree, "linear sections")


    def test_complete_intersection_seeds(self):
        i = ideal(self.r, "x^2", "y^2")
        for seed in range(5):
            g = projective_degrees(i, trials=5, seed=seed)
            self.assertEqual((1, 2, 0), g.g, "seed " + str(seed))
            self.assertFalse(g.disagreement, "trials agree for seed " + str(seed))
            nu = vogel_degrees(i, trials=5, seed=seed).nu
            self.assertEqual(CycleClass.of([0, 0, 4]), nu, "Vogel degrees for seed " + str(seed))


    def test_principal(self):
        i = ideal(self.r, "x^2 + y*z")
        self.assertEqual((1, 0, 0), projective_degrees(i, trials=2).g, "the divisor is removed at once")
        self.assertEqual(CycleClass.of([0, 2, 0]), vogel_degrees(i, trials=2).nu, "divisor of degree 2")


    def test_linear_vogel(self):
        data = vogel_degrees(ideal(self.r, "x", "y"), trials=3)
        self.assertEqual(CycleClass.of([0, 0, 1]), data.nu, "point")
        self.assertIsNone(data.chain, "no trace requested")


    def test_irrelevant_primary(self):
        # V(I) is empty in P^2, nothing is supported on it
        data = vogel_degrees(ideal(self.r, "x^2", "x*y", "y^2", "x*z", "y*z", "z^2"), trials=2)
        self.assertEqual((1, 2, 4), data.g.g, "projective degrees of the Veronese map")
        self.assertEqual(CycleClass.of([0, 0, 0]), data.nu, "empty Vogel cycle")


    def test_trace(self):
        data = vogel_degrees(ideal(self.r, "x", "y"), trials=2, trace=True)
        self.assertEqual(3, len(data.chain), "B_0, B_1 and B_2")
        self.assertTrue(data.chain[0].is_zero(), "B_0 = (0)")
        self.assertTrue(data.chain[2].is_unit(), "the residual is empty at the end")
        self.assertIn("chain", data.to_dict(), "chain in the payload")


    def test_telescoping(self):
        for texts in (["x", "y"], ["x^2", "y^2"], ["x^2 + y*z"], ["x^2", "x*y", "y^2"]):
            data = vogel_degrees(ideal(self.r, *texts), trials=2)
            d = data.section_degree
            g = data.g.g
            self.assertTrue(telescoping_holds(data.nu, g, d), "telescoping for " + str(texts))
            for i in range(1, len(g)):
                self.assertEqual(d * g[i - 1], data.nu[i] + g[i], "codimension " + str(i) + " for " + str(texts))
                if g[i - 1] == 0:
                    self.assertEqual(0, g[i], "empty residuals stay empty for " + str(texts))
        self.assertFalse(telescoping_holds(CycleClass.of([0, 0, 3]), (1, 2, 0), 2), "wrong Vogel degree")


    def test_corpus_consensus(self):
        for name, i in corpus():
            runs = [vogel_degrees(i, trials=2, seed=seed) for seed in range(5)]
            self.assertEqual(1, len(set(data.g.g for data in runs)), "one projective degree vector for " + name)
            for seed, data in enumerate(runs):
                self.assertTrue(telescoping_holds(data.nu, data.g.g, data.section_degree), name + " with seed " + str(seed))


    def test_non_generic_sections(self):
        r = self.r
        i = ideal(r, "x^2", "y^2")
        x2 = poly(r, "x^2")
        sections = GenericSections((x2, x2), i, (), (), 0, 2)
        with self.assertRaises(GenericityFailure):
            residual_chain(sections)


    def test_single_run(self):
        i = ideal(self.r, "x^2", "y^2")
        data = residual_chain(make_sections(i, 1))
        self.assertEqual((1, 2, 0), data.g.g, "one run")
        self.assertEqual([0, 0, 4], data.nu.to_list(), "Vogel degrees of one run")


    def test_trials_used(self):
        i = ideal(self.r, "x^2", "y^2")
        target = "segrezeta.vogel.projectivedegrees._run_trials"
        with mock.patch(target, side_effect=[[MockRun((1, 2, 0)), MockRun((1, 1, 0))],
                                             [MockRun((1, 2, 0)), MockRun((1, 2, 0))]]) as run_trials:
            g = projective_degrees(i, trials=2)
        self.assertEqual(2, run_trials.call_count, "no two trials agreed, so the trials were doubled")
        self.assertEqual((1, 2, 0), g.g, "maximum survives the doubling")
        self.assertEqual(4, g.trials, "doubled count is reported")
        self.assertTrue(g.disagreement, "disagreement is reported")
        with mock.patch(target, return_value=[MockRun((1, 2, 0)), MockRun((1, 2, 0))]):
            self.assertEqual(2, projective_degrees(i, trials=2).trials, "agreeing trials are not doubled")
