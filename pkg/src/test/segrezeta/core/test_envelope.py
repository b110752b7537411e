#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import json
import unittest

from segrezeta.core.envelope import SCHEMA, ResultEnvelope, content_hash
from segrezeta.core.version import VERSION


class EnvelopeTestCase(unittest.TestCase):

    def setUp(self):
        self.envelope = ResultEnvelope("segre", (("ci22.ideal", content_hash("gens: x^2, y^2")),),
                                       {"seed": 0, "trials": 5}, {"s": [0, 0, 4], "g": [1, 2, 0]})


    def test_hash(self):
        digest = content_hash("vars: x\ngens: x\n")
        self.assertTrue(digest.startswith("sha256:"), "algorithm prefix")
        self.assertEqual(7 + 64, len(digest), "hex digest")
        self.assertEqual(digest, content_hash("vars: x\ngens: x\n"), "deterministic")
        self.assertNotEqual(digest, content_hash("vars: y\ngens: y\n"), "content sensitive")


    def test_json(self):
        data = json.loads(self.envelope.to_json())
        self.assertEqual(SCHEMA, data["schema"], "schema")
        self.assertEqual(VERSION, data["version"], "version")
        self.assertEqual("segre", data["command"], "command")
        self.assertEqual("ci22.ideal", data["inputs"][0]["path"], "input path")
        self.assertEqual([0, 0, 4], data["payload"]["s"], "payload")
        self.assertEqual(self.envelope.to_json(), self.envelope.to_json(), "stable output")
        self.assertLess(self.envelope.to_json().index("\"g\""), self.envelope.to_json().index("\"s\""), "sorted keys")


    def test_text(self):
        text = self.envelope.to_text()
        self.assertTrue(text.startswith("segre (segrezeta " + VERSION + ")"), "header")
        self.assertIn("s  [0, 0, 4]", text, "payload line")
        self.assertIn("parameters seed=0, trials=5", text, "parameters line")
