#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from dataclasses import dataclass

import numpy as np

from segrezeta.arith.polynomial import PolynomialRing
from segrezeta.core.errors import PreconditionViolation
from segrezeta.cycles.cycleclass import CycleClass, vogel_to_segre
from segrezeta.groebner.ideal import Ideal
from segrezeta.vogel.projectivedegrees import vogel_degrees


@dataclass(frozen=True)
class SegreResult:
    """pushforward of the Segre class of V(I) to P^n"""

    s: CycleClass
    source_degrees: tuple
    vogel: object
    seed: int
    characteristic: int

    def to_dict(self):
        result = {"s": self.s.to_list(), "source_degrees": list(self.source_degrees), "seed": self.seed,
                  "characteristic": self.characteristic}
        result.update(self.vogel.to_dict())
        return result


def _check_geometric(ideal):
    if ideal.is_zero() or not ideal.is_homogeneous():
        raise PreconditionViolation("expected a nonzero homogeneous ideal: " + str(ideal))
    if ideal.is_unit():
        raise PreconditionViolation("the unit ideal defines no subscheme")


def segre_degrees(ideal, trials=5, seed=0, degree=None, saturation="quotient", trace=False):
    """Segre degrees s_0..s_n of V(I) in P^n via the Vogel degrees

    @param ideal homogeneous, nonzero and proper ideal
    @param degree forced section degree, see make_sections
    """
    _check_geometric(ideal)
    vogel = vogel_degrees(ideal, trials, seed, degree, saturation, trace)
    s = vogel_to_segre(vogel.nu, vogel.section_degree)
    return SegreResult(s, ideal.generator_degrees, vogel, seed, ideal.ring.field.modulus)


def series_product(factors):
    """coefficients of the product of the polynomials given as coefficient lists"""
    result = np.array([1], dtype=object)
    for f in factors:
        result = np.convolve(result, np.array(f, dtype=object))
    return [int(c) for c in result]


def series_quotient(numerator, degrees, order):
    """power series coefficients a_0..a_order of numerator / prod(1 + d t)"""
    a = [int(c) for c in numerator[:order + 1]] + [0] * max(0, order + 1 - len(numerator))
    for d in degrees:
        for k in range(1, order + 1):
            a[k] = a[k] - d * a[k - 1]
    return a


def ci_segre_oracle(degrees, n):
    """Segre degrees of a complete intersection of forms of the given
    degrees in P^n: prod(d_i) t^r / prod(1 + d_i t) truncated at t^n"""
    r = len(degrees)
    if r > n + 1:
        raise PreconditionViolation("a complete intersection in P^" + str(n) + " has at most " + str(n + 1) + " equations")
    numerator = [0] * r + [int(np.prod(np.array(degrees, dtype=object)))]
    return CycleClass(n, series_quotient(numerator, degrees, n))


def _extra_names(ring, count):
    names = []
    i = 0
    while len(names) < count:
        name = "w" + str(i)
        if name not in ring.variables:
            names.append(name)
        i = i + 1
    return names


def extend_ideal(ideal, ambient_dim):
    """the same generators read in a polynomial ring with ambient_dim + 1 variables

    @param ambient_dim N >= n, the new variables are appended after the old ones
    """
    ring = ideal.ring
    n = ring.nvars - 1
    if ambient_dim < n:
        raise PreconditionViolation("cannot extend from P^" + str(n) + " to P^" + str(ambient_dim))
    if ambient_dim == n:
        return ideal
    big = PolynomialRing(ring.field, ring.variables + tuple(_extra_names(ring, ambient_dim - n)), ring.order)
    positions = list(range(ring.nvars))
    return Ideal(big, [big.embed(g, positions) for g in ideal.generators])
