#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import logging
from dataclasses import dataclass

import numpy as np

from segrezeta.core.errors import PreconditionViolation


@dataclass(frozen=True)
class GenericSections:
    """random linear combinations s_1, ..., s_k of sections of I(d)"""

    sections: tuple
    source_ideal: object
    spanning: tuple
    scalar_matrix: tuple
    seed: object
    degree: int


def spanning_sections(ideal, degree):
    """generators of I lifted to a common degree.

    A generator g of degree e < degree is replaced by g * x_j^(degree - e)
    for every variable x_j. These products generate the same ideal sheaf
    as g, so the section scheme is unchanged.

    @param ideal homogeneous ideal
    @param degree target degree, at least the largest generator degree
    """
    ring = ideal.ring
    result = []
    for g in ideal.generators:
        e = g.degree()
        if e == degree:
            result.append(g)
            continue
        for j in range(ring.nvars):
            exps = [0] * ring.nvars
            exps[j] = degree - e
            result.append(g.mul_term(1, tuple(exps)))
    return result


def random_generator(seed, trial=0):
    """numpy generator for one trial of a seeded computation"""
    return np.random.default_rng([int(seed), int(trial)])


def make_sections(ideal, seed, degree=None, rng=None):
    """generic sections of I(d) for the intersection algorithm.

    @param ideal homogeneous, nonzero and proper ideal
    @param seed seed recorded with the sections
    @param degree forced section degree d, the largest generator degree if not specified
    @param rng numpy random generator, derived from seed if not specified
    @return GenericSections with min(#spanning sections, n) random combinations
    """
    if ideal.is_zero():
        raise PreconditionViolation("generic sections of the zero ideal")
    if not ideal.is_homogeneous():
        raise PreconditionViolation("generic sections need a homogeneous ideal: " + str(ideal))
    if ideal.is_unit():
        raise PreconditionViolation("generic sections of the unit ideal")

    max_degree = ideal.max_degree()
    if degree is None:
        degree = max_degree
    if degree < max_degree:
        raise PreconditionViolation("section degree " + str(degree) + " is below the generator degree " + str(max_degree))
    if rng is None:
        rng = random_generator(seed)

    ring = ideal.ring
    p = ring.field.modulus
    spanning = spanning_sections(ideal, degree)
    count = min(len(spanning), ring.nvars - 1)

    matrix = rng.integers(1, p, size=(count, len(spanning)))
    sections = []
    for row in matrix:
        s = ring.zero()
        for u, sigma in zip(row, spanning):
            s = s + sigma.scale(int(u))
        sections.append(s)

    logging.debug("sections of degree " + str(degree) + ": " + str(count) + " combinations of " + str(len(spanning)) + " generators")
    return GenericSections(tuple(sections), ideal, tuple(spanning),
                           tuple(tuple(int(u) for u in row) for row in matrix), seed, degree)
