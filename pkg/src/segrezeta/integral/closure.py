#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import itertools
import logging
from dataclasses import dataclass

import sympy

from segrezeta.arith.monomial import mono_divides, monomials_of_degree
from segrezeta.core.errors import PreconditionViolation
from segrezeta.groebner.ideal import Ideal


@dataclass(frozen=True)
class MonomialClosure:
    """integral closure of a monomial ideal with a convex combination
    certificate for every generator"""

    ideal: Ideal
    certificates: dict

    def to_dict(self):
        return {"generators": [str(g) for g in self.ideal.generators],
                "certificates": {str(k): [str(c) for c in v] for k, v in self.certificates.items()}}


def _exponents(ideal):
    if not ideal.is_monomial():
        raise PreconditionViolation("expected a monomial ideal: " + str(ideal))
    return [g.leading_monomial() for g in ideal.generators]


def _constraints(vertices, v):
    """rows (a, b) of a * lambda <= b: nonnegativity first, then sum lambda_i e_i <= v"""
    k = len(vertices)
    rows = [([-1 if i == m else 0 for i in range(k)], 0) for m in range(k)]
    rows += [([e[j] for e in vertices], v[j]) for j in range(len(v))]
    return rows


def _is_certificate(vertices, v, weights):
    if any(w < 0 for w in weights) or sum(weights) != 1:
        return False
    return all(sum(w * e[j] for w, e in zip(weights, vertices)) <= v[j] for j in range(len(v)))


def _in_newton_polyhedron(vertices, v):
    """weights lambda >= 0 with sum 1 and sum lambda_i e_i <= v, None if there are none.

    The weights form a bounded polytope. If it is not empty, one of its
    vertices is cut out by sum lambda_i = 1 and k - 1 further tight
    constraints, so trying all such systems decides membership exactly.
    """
    for i, e in enumerate(vertices):
        if mono_divides(e, v):
            return tuple(sympy.Integer(1) if j == i else sympy.Integer(0) for j in range(len(vertices)))
    k = len(vertices)
    rows = _constraints(vertices, v)
    for active in itertools.combinations(rows, k - 1):
        matrix = sympy.Matrix([[1] * k] + [a for a, _ in active])
        if matrix.det() == 0:
            continue
        weights = tuple(matrix.LUsolve(sympy.Matrix([1] + [b for _, b in active])))
        if _is_certificate(vertices, v, weights):
            return weights
    return None


def element_integral_monomial(ideal, exponents):
    """Newton polyhedron membership of a single monomial.

    @param ideal monomial ideal
    @param exponents exponent vector of the monomial
    @return the weights lambda certifying exponents >= sum lambda_i e_i, or None
    """
    vertices = _exponents(ideal)
    if not vertices:
        return None
    if len(exponents) != ideal.ring.nvars:
        raise PreconditionViolation("exponent vector " + str(exponents) + " does not match " + repr(ideal.ring))
    return _in_newton_polyhedron(vertices, tuple(exponents))


def monomial_closure_oracle(ideal):
    """integral closure of a monomial ideal.

    Monomials are tested by increasing degree up to the largest generator
    degree plus nvars - 1; minimal lattice points of the Newton polyhedron
    lie in this range, so the result generates the whole closure.
    """
    vertices = _exponents(ideal)
    ring = ideal.ring
    if not vertices:
        return MonomialClosure(ideal, {})
    bound = max(sum(e) for e in vertices) + ring.nvars - 1

    found = []
    certificates = {}
    for degree in range(min(sum(e) for e in vertices), bound + 1):
        for v in monomials_of_degree(ring.nvars, degree):
            if any(mono_divides(g, v) for g in found):
                continue
            weights = _in_newton_polyhedron(vertices, v)
            if weights is not None:
                found.append(v)
                certificates[v] = weights
    logging.debug("integral closure of " + str(ideal) + " has " + str(len(found)) + " generators")
    closure = Ideal(ring, [ring.monomial(v) for v in found])
    return MonomialClosure(closure, {str(ring.monomial(v)): certificates[v] for v in found})
