#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import collections
import logging

from segrezeta.core.errors import GenericityFailure, PreconditionViolation
from segrezeta.cycles.cycleclass import CycleClass, polar_degrees_from_vogel
from segrezeta.vogel.residualchain import residual_chain
from segrezeta.vogel.sections import make_sections, random_generator
from segrezeta.vogel.vogeldata import ProjectiveDegrees, VogelData


def _run_trials(ideal, seed, first, count, degree, saturation):
    """independent residual chains for the trials first, ..., first + count - 1.
    Rejected trials are logged and skipped."""
    runs = []
    for trial in range(first, first + count):
        sections = make_sections(ideal, seed, degree, random_generator(seed, trial))
        try:
            data = residual_chain(sections, saturation)
        except GenericityFailure as e:
            logging.warning("trial " + str(trial) + " (seed " + str(seed) + ") rejected: " + e.message)
            continue
        logging.info("trial " + str(trial) + " (seed " + str(seed) + "): g = " + str(list(data.g.g)))
        runs.append(data)
    return runs


def _entrywise_max(vectors):
    return tuple(max(column) for column in zip(*vectors))


def _consensus(ideal, trials, seed, degree, saturation):
    """runs the trials and merges them by the entrywise maximum.

    Non-generic scalars can only move degree from the residual to the part
    supported on V(I), so the maximum is the generic value. If no two
    trials agree, the maximum has to survive a doubling of the trials."""
    if trials < 1:
        raise PreconditionViolation("number of trials must be >= 1, got " + str(trials))
    if not ideal.is_homogeneous():
        raise PreconditionViolation("projective degrees need a homogeneous ideal: " + str(ideal))

    runs = _run_trials(ideal, seed, 0, trials, degree, saturation)
    used = trials
    if not runs:
        raise GenericityFailure("all " + str(trials) + " trials were rejected", seed=seed, trials=trials)

    vectors = [run.g.g for run in runs]
    best = _entrywise_max(vectors)
    counts = collections.Counter(vectors)
    disagreement = len(counts) > 1
    if disagreement:
        logging.warning("trials disagree on projective degrees: " + ", ".join(str(list(v)) for v in counts))

    if trials > 1 and max(counts.values()) < 2:
        more = _run_trials(ideal, seed, trials, trials, degree, saturation)
        doubled = _entrywise_max(vectors + [run.g.g for run in more])
        if doubled != best:
            raise GenericityFailure("projective degrees are unstable: " + str(list(best)) + " with " + str(trials)
                                    + " trials, " + str(list(doubled)) + " with " + str(2 * trials),
                                    seed=seed, trials=trials)
        runs = runs + more
        used = 2 * trials

    representative = next((run for run in runs if run.g.g == best), None)
    d = runs[0].section_degree
    return ProjectiveDegrees(best, d, used, seed, disagreement), representative


def projective_degrees(ideal, trials=5, seed=0, degree=None, saturation="quotient"):
    """projective degrees g_0..g_n of the rational map given by sections of I(d)

    @param ideal homogeneous, nonzero and proper ideal
    @param trials number of independent runs merged by consensus
    @param seed base seed; trial k uses the generator seeded by (seed, k)
    @param degree forced section degree, the largest generator degree if not specified
    """
    g, _ = _consensus(ideal, trials, seed, degree, saturation)
    return g


def telescoping_holds(nu, g, d):
    """d * g_(i-1) = nu_i + g_i for all i >= 1, and g_0 = 1 - nu_0"""
    return list(g) == polar_degrees_from_vogel(nu, d)


def vogel_degrees(ideal, trials=5, seed=0, degree=None, saturation="quotient", trace=False):
    """Vogel degrees nu_0..nu_n from the consensus projective degrees.

    @param trace keep the residual ideals of one run that reached the consensus
    @raise GenericityFailure for negative Vogel degrees
    """
    g, representative = _consensus(ideal, trials, seed, degree, saturation)
    d = g.section_degree
    values = g.g
    nu = [1 - values[0]] + [d * values[i - 1] - values[i] for i in range(1, len(values))]
    negative = [i for i, v in enumerate(nu) if v < 0]
    if negative:
        raise GenericityFailure("negative Vogel degree nu_" + str(negative[0]) + " = " + str(nu[negative[0]]),
                                nu=nu, g=list(values), seed=seed)
    if not telescoping_holds(nu, values, d):
        raise GenericityFailure("telescoping identity violated for nu = " + str(nu) + ", g = " + str(list(values)))

    chain = representative.chain if trace and representative is not None else None
    return VogelData(CycleClass(len(nu) - 1, nu), g, d, chain)
