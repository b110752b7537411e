#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from sympy import isprime

from segrezeta.core.errors import PreconditionViolation

DEFAULT_MODULUS = 32003


class PrimeField:
    """the prime field GF(p). Elements are plain Python ints in [0, p)."""

    def __init__(self, modulus=DEFAULT_MODULUS):
        """creates a prime field

        @param modulus prime number below 2^31
        """
        if not isinstance(modulus, int) or modulus < 2 or modulus >= 2**31 or not isprime(modulus):
            raise PreconditionViolation("characteristic " + str(modulus) + " is not a prime below 2^31")
        self.modulus = modulus


    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus


    def __hash__(self):
        return hash(("GF", self.modulus))


    def __repr__(self):
        return "GF(" + str(self.modulus) + ")"


    def mul(self, a, b):
        return (a * b) % self.modulus


    def inverse(self, a):
        """multiplicative inverse of a nonzero element"""
        if a % self.modulus == 0:
            raise ZeroDivisionError("zero has no inverse in " + repr(self))
        return pow(a, -1, self.modulus)


    def symmetric(self, a):
        """representative in (-p/2, p/2], used for printing"""
        a = a % self.modulus
        if a > self.modulus // 2:
            return a - self.modulus
        return a
