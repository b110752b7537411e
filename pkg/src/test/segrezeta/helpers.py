#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import os

from segrezeta.arith.polynomial import PolynomialRing
from segrezeta.arith.primefield import PrimeField
from segrezeta.core.segrezeta import CORPUS_DIR
from segrezeta.groebner.ideal import Ideal
from segrezeta.parser.idealfile import ExpressionParser, parse_ideal_file


def ring(variables="x y z", modulus=32003, order=None):
    """a polynomial ring over GF(modulus) with space separated variable names"""
    return PolynomialRing(PrimeField(modulus), variables.split(), order)


def poly(r, text):
    """parses a single polynomial of ring r"""
    return ExpressionParser(r, text, 1, 1).parse_list()[0][0]


def ideal(r, *texts):
    """the ideal of ring r generated by the given polynomials"""
    return Ideal(r, [poly(r, t) for t in texts])


def corpus():
    """(name, Ideal) for every ideal file shipped in the corpus, sorted by name"""
    result = []
    for name in sorted(os.listdir(CORPUS_DIR)):
        if name.endswith(".ideal"):
            with open(os.path.join(CORPUS_DIR, name), "r", encoding="utf-8") as f:
                result.append((name, parse_ideal_file(f.read()).ideal))
    return result
