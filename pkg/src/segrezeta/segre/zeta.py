#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import logging
from dataclasses import dataclass, field

from segrezeta.core.errors import NegativeNumerator, NotStabilized, PreconditionViolation
from segrezeta.cycles.cycleclass import CycleClass
from segrezeta.segre.segre import extend_ideal, segre_degrees, series_product, series_quotient


@dataclass(frozen=True)
class ZetaFunction:
    """the rational function P(t) / prod(1 + d_i t)"""

    numerator: tuple
    denominator_degrees: tuple
    truncation_order: int
    stabilized: bool
    trials: int = field(default=None, compare=False)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.numerator):
            if c == 0:
                continue
            power = "" if k == 0 else ("t" if k == 1 else "t^" + str(k))
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(power)
            else:
                terms.append(str(c) + "*" + power)
        numerator = " + ".join(terms) if terms else "0"
        denominator = "".join("(1+" + ("" if d == 1 else str(d)) + "t)" for d in self.denominator_degrees)
        return "(" + numerator + ")/" + (denominator if denominator else "1")


    def to_dict(self):
        return {"numerator": list(self.numerator), "denominator_degrees": list(self.denominator_degrees),
                "truncation_order": self.truncation_order, "stabilized": self.stabilized, "trials": self.trials}


def _trim(coefficients):
    result = list(coefficients)
    while result and result[-1] == 0:
        result.pop()
    return tuple(result)


def _numerator_at(ideal, ambient_dim, trials, seed, saturation):
    """P_N(t) = (a_0 + ... + a_N t^N) * prod(1 + d_i t), truncated at t^N,
    together with the number of trials the Segre degrees needed"""
    segre = segre_degrees(extend_ideal(ideal, ambient_dim), trials, seed, saturation=saturation)
    factors = [[1, d] for d in ideal.generator_degrees]
    product = series_product([segre.s.to_list()] + factors)
    return _trim(product[:ambient_dim + 1]), segre.vogel.g.trials


def zeta(ideal, trials=5, seed=0, saturation="quotient"):
    """the Segre zeta function of a homogeneous ideal.

    The numerator is computed from the Segre degrees in P^N for N = n + r
    and confirmed in P^(N+1).

    @raise NotStabilized when the two numerators differ
    @raise NegativeNumerator when the numerator has a negative coefficient
    """
    if ideal.is_zero():
        raise PreconditionViolation("zeta function of the zero ideal")
    n = ideal.ring.nvars - 1
    ambient_dim = n + len(ideal.generators)

    first, first_trials = _numerator_at(ideal, ambient_dim, trials, seed, saturation)
    second, second_trials = _numerator_at(ideal, ambient_dim + 1, trials, seed, saturation)
    if first != second:
        logging.warning("zeta numerator not stable: " + str(list(first)) + " in P^" + str(ambient_dim)
                        + ", " + str(list(second)) + " in P^" + str(ambient_dim + 1))
        raise NotStabilized("zeta numerator changed between P^" + str(ambient_dim) + " and P^" + str(ambient_dim + 1),
                            numerators=[list(first), list(second)], ambient_dims=[ambient_dim, ambient_dim + 1])
    logging.info("zeta numerator " + str(list(first)) + " stable in P^" + str(ambient_dim) + " and P^" + str(ambient_dim + 1))

    if any(c < 0 for c in first):
        raise NegativeNumerator("zeta numerator " + str(list(first)) + " has a negative coefficient",
                                numerator=list(first), seed=seed)
    return ZetaFunction(first, tuple(ideal.generator_degrees), ambient_dim, True, max(first_trials, second_trials))


def zeta_series(z, order):
    """power series coefficients a_0..a_order of the zeta function"""
    if order < 0:
        raise PreconditionViolation("series order must be >= 0, got " + str(order))
    return series_quotient(list(z.numerator), z.denominator_degrees, order)


def zeta_to_segre(z, n):
    """Segre degrees in P^n read off the zeta function"""
    return CycleClass(n, zeta_series(z, n))
