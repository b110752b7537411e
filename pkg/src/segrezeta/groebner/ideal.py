#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import threading

from segrezeta.core.errors import RingMismatch
from segrezeta.groebner.buchberger import groebner_basis, reduce_polynomial


class Ideal:
    """an ideal of a polynomial ring given by a list of generators.

    The reduced Groebner basis is computed on first use and cached.
    Ideals are never modified after construction."""

    def __init__(self, ring, generators):
        """creates an ideal

        @param ring PolynomialRing containing all generators
        @param generators iterable of polynomials, zeros are dropped
        """
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatch("generator " + str(g) + " is not in " + repr(ring))
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        self.generator_degrees = tuple(g.degree() for g in gens)
        self.__gb = None
        self.__lock = threading.RLock()


    @classmethod
    def zero(cls, ring):
        return cls(ring, [])


    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])


    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"


    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


    def reduced_gb(self):
        """the reduced Groebner basis in the ring's order (write-once cache)"""
        if self.__gb is None:
            with self.__lock:
                if self.__gb is None:
                    self.__gb = tuple(groebner_basis(self.generators))
        return list(self.__gb)


    def normal_form(self, f):
        """remainder of f on division by the reduced Groebner basis"""
        if f.ring != self.ring:
            raise RingMismatch("polynomial " + str(f) + " is not in " + repr(self.ring))
        return reduce_polynomial(f, self.reduced_gb())


    def contains(self, f):
        return self.normal_form(f).is_zero()


    def is_zero(self):
        return not self.generators


    def is_unit(self):
        gb = self.reduced_gb()
        return len(gb) == 1 and gb[0].is_constant()


    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)


    def is_monomial(self):
        """are all generators monomials?"""
        return all(g.is_monomial() for g in self.generators)


    def lead_monomials(self):
        """exponent vectors of the leading monomials of the reduced basis"""
        return [g.leading_monomial() for g in self.reduced_gb()]


    def max_degree(self):
        return max(self.generator_degrees) if self.generators else 0
