#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import logging
from dataclasses import dataclass

from segrezeta.core.errors import GenericityFailure, NotStabilized, PreconditionViolation
from segrezeta.cycles.cycleclass import degrees_in_twist
from segrezeta.groebner.operations import is_subideal
from segrezeta.integral.rees import rees_certificate
from segrezeta.integral.verdict import Status, Verdict
from segrezeta.segre.segre import segre_degrees, series_product
from segrezeta.segre.zeta import zeta, zeta_series
from segrezeta.vogel.projectivedegrees import vogel_degrees


def _cross_products(left, right):
    """P_I * prod(1 + e_j t) and P_J * prod(1 + d_i t)"""
    a = series_product([list(left.numerator)] + [[1, e] for e in right.denominator_degrees])
    b = series_product([list(right.numerator)] + [[1, d] for d in left.denominator_degrees])
    length = max(len(a), len(b))
    return a + [0] * (length - len(a)), b + [0] * (length - len(b))


def compare_zeta(left, right):
    """compares two zeta functions as rational functions.

    @return (equal, witness) where witness names the first power series
            coefficient in which they differ, None when they are equal
    """
    a, b = _cross_products(left, right)
    if a == b:
        return True, None
    order = len(a)
    sa = zeta_series(left, order)
    sb = zeta_series(right, order)
    k = next(k for k in range(order + 1) if sa[k] != sb[k])
    return False, {"index": k, "left": sa[k], "right": sb[k]}


def zeta_equal(ideal, other, trials=5, seed=0, saturation="quotient"):
    """do the two ideals have the same Segre zeta function?

    @return (equal, witness, (zeta of ideal, zeta of other))
    @raise NotStabilized propagated from the zeta computation
    """
    left = zeta(ideal, trials, seed, saturation)
    right = zeta(other, trials, seed, saturation)
    equal, witness = compare_zeta(left, right)
    return equal, witness, (left, right)


def segre_equal_fixed_ambient(ideal, other, trials=5, seed=0, saturation="quotient"):
    """componentwise equality of the Segre degrees on the given P^n.

    This compares the ideal sheaves: ideals with the same saturation are
    not distinguished. Use the zeta comparison to compare the ideals themselves."""
    if not is_subideal(ideal, other):
        raise PreconditionViolation(str(ideal) + " is not contained in " + str(other))
    left = segre_degrees(ideal, trials, seed, saturation=saturation)
    right = segre_degrees(other, trials, seed, saturation=saturation)
    return left.s == right.s


def _check_pair(ideal, other):
    for i in (ideal, other):
        if i.is_zero() or i.is_unit() or not i.is_homogeneous():
            raise PreconditionViolation("expected a nonzero proper homogeneous ideal: " + str(i))
    if not is_subideal(ideal, other):
        raise PreconditionViolation(str(ideal) + " is not contained in " + str(other))


def decide_integral(ideal, other, n_max=6, trials=5, seed=0, saturation="quotient"):
    """is J integral over I?

    1. a Rees certificate I * J^n = J^(n+1) with n <= n_max proves Integral
    2. different zeta functions prove NotIntegral
    3. equal zeta functions give Integral, flagged as resting on the zeta test
    4. failing zeta computations give Inconclusive

    @param ideal I
    @param other J, containing I
    """
    _check_pair(ideal, other)
    parameters = {"characteristic": ideal.ring.field.modulus, "seed": seed, "trials": trials, "n_max": n_max}

    n = rees_certificate(ideal, other, n_max)
    if n is not None:
        logging.info("Integral: I * J^" + str(n) + " = J^" + str(n + 1))
        return Verdict(Status.INTEGRAL, {"rees_exponent": n}, parameters)

    try:
        equal, witness, zetas = zeta_equal(ideal, other, trials, seed, saturation)
    except (NotStabilized, GenericityFailure) as e:
        logging.warning("integral dependence inconclusive: " + e.message)
        return Verdict(Status.INCONCLUSIVE, {"reason": e.kind, "message": e.message, "rees_searched_up_to": n_max}, parameters)

    parameters["trials"] = max(z.trials for z in zetas)
    if not equal:
        logging.info("NotIntegral: zeta functions differ at t^" + str(witness["index"]))
        return Verdict(Status.NOT_INTEGRAL, {"zeta_witness": witness}, parameters, zetas=zetas)
    logging.info("Integral by equal zeta functions, no Rees certificate up to n = " + str(n_max))
    return Verdict(Status.INTEGRAL, {"zeta_equal": True, "rees_searched_up_to": n_max}, parameters, by_zeta=True, zetas=zetas)


@dataclass(frozen=True)
class DegreeComparison:
    """Segre, Vogel and projective degrees of I and J side by side, the
    latter two for sections of the common degree d. segre_in_twist holds
    the Segre degrees measured with O(d)"""

    section_degree: int
    segre: tuple
    segre_in_twist: tuple
    vogel: tuple
    projective: tuple
    segre_equal: bool
    vogel_equal: bool
    projective_equal: bool

    def to_dict(self):
        return {
            "section_degree": self.section_degree,
            "segre": [c.to_list() for c in self.segre],
            "segre_in_twist": [c.to_list() for c in self.segre_in_twist],
            "vogel": [c.to_list() for c in self.vogel],
            "projective": [list(g) for g in self.projective],
            "segre_equal": self.segre_equal,
            "vogel_equal": self.vogel_equal,
            "projective_equal": self.projective_equal,
        }


def compare_numerical_invariants(ideal, other, trials=5, seed=0, saturation="quotient"):
    """evaluates the three equivalent degree conditions for I contained in J.

    The Segre degrees are independent of the section degree and are
    computed with each ideal's own d. Vogel and projective degrees are
    computed for sections of O(max(d_I, d_J)) for both ideals.

    @raise GenericityFailure when the three conditions do not coincide
    """
    _check_pair(ideal, other)
    d = max(ideal.max_degree(), other.max_degree())

    segre = (segre_degrees(ideal, trials, seed, saturation=saturation).s,
             segre_degrees(other, trials, seed, saturation=saturation).s)
    vogel = (vogel_degrees(ideal, trials, seed, d, saturation), vogel_degrees(other, trials, seed, d, saturation))

    twisted = (degrees_in_twist(segre[0], d), degrees_in_twist(segre[1], d))
    comparison = DegreeComparison(d, segre, twisted, (vogel[0].nu, vogel[1].nu), (vogel[0].g.g, vogel[1].g.g),
                                  segre[0] == segre[1], vogel[0].nu == vogel[1].nu, vogel[0].g.g == vogel[1].g.g)
    if not comparison.segre_equal == comparison.vogel_equal == comparison.projective_equal:
        raise GenericityFailure("degree conditions disagree: segre " + str(comparison.segre_equal) + ", vogel "
                                + str(comparison.vogel_equal) + ", projective " + str(comparison.projective_equal),
                                seed=seed, trials=trials)
    return comparison
