#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from segrezeta.arith.monomial import GrevlexOrder, mono_divides, mono_mul, mono_quotient
from segrezeta.core.errors import RingMismatch


class PolynomialRing:
    """the ring GF(p)[x_0, ..., x_{k-1}] together with a monomial order.

    Rings are compared by value, so two independently constructed rings
    over the same field, variables and order are interchangeable."""

    def __init__(self, field, variables, order=None):
        """creates a polynomial ring

        @param field PrimeField of coefficients
        @param variables ordered sequence of variable names
        @param order monomial order, grevlex if not specified
        """
        self.field = field
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names: " + ", ".join(self.variables))
        self.order = order if order is not None else GrevlexOrder()
        self.nvars = len(self.variables)


    def __eq__(self, other):
        return (isinstance(other, PolynomialRing) and self.field == other.field
                and self.variables == other.variables and self.order == other.order)


    def __hash__(self):
        return hash((self.field, self.variables, self.order))


    def __repr__(self):
        return repr(self.field) + "[" + ", ".join(self.variables) + "]"


    def zero(self):
        return Polynomial(self, {})


    def one(self):
        return self.constant(1)


    def constant(self, value):
        return Polynomial(self, {(0,) * self.nvars: value})


    def variable(self, index_or_name):
        """the polynomial x_i, given by index or by name"""
        if isinstance(index_or_name, str):
            index = self.variables.index(index_or_name)
        else:
            index = index_or_name
        exps = [0] * self.nvars
        exps[index] = 1
        return Polynomial(self, {tuple(exps): 1})


    def gens(self):
        return [self.variable(i) for i in range(self.nvars)]


    def monomial(self, exps, coefficient=1):
        return Polynomial(self, {tuple(exps): coefficient})


    def embed(self, poly, positions):
        """maps a polynomial of another ring into this ring.

        @param poly polynomial over the same field
        @param positions positions[j] is the index in this ring of variable j of poly's ring
        """
        if poly.ring.field != self.field:
            raise RingMismatch("cannot embed " + repr(poly.ring) + " into " + repr(self))
        terms = {}
        for exps, c in poly.items():
            target = [0] * self.nvars
            for j, e in enumerate(exps):
                if e:
                    target[positions[j]] += e
            terms[tuple(target)] = c
        return Polynomial(self, terms)


class Polynomial:
    """an immutable multivariate polynomial over a prime field.

    Terms are stored as a mapping exponent vector -> nonzero coefficient;
    the descending term list in the ring's order is computed on demand."""

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring, terms, normalized=False):
        """creates a polynomial

        @param ring PolynomialRing
        @param terms dict exponent tuple -> integer coefficient
        @param normalized skip reduction of coefficients and removal of zeros
        """
        self.ring = ring
        if normalized:
            self._terms = terms
        else:
            p = ring.field.modulus
            cleaned = {}
            for exps, c in terms.items():
                if len(exps) != ring.nvars:
                    raise ValueError("exponent vector " + str(exps) + " does not match " + repr(ring))
                c = c % p
                if c:
                    cleaned[tuple(exps)] = c
            self._terms = cleaned
        self._sorted = None
        self._hash = None


    def items(self):
        return self._terms.items()


    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)


    def exponents(self):
        """exponent vectors in strictly descending order"""
        if self._sorted is None:
            self._sorted = sorted(self._terms, key=self.ring.order.key, reverse=True)
        return self._sorted


    def __len__(self):
        return len(self._terms)


    def is_zero(self):
        return not self._terms


    def is_constant(self):
        return all(sum(e) == 0 for e in self._terms)


    def is_monomial(self):
        return len(self._terms) == 1


    def leading_monomial(self):
        return self.exponents()[0]


    def leading_coefficient(self):
        return self._terms[self.exponents()[0]]


    def degree(self):
        """total degree, -1 for the zero polynomial"""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)


    def is_homogeneous(self):
        degrees = {sum(e) for e in self._terms}
        return len(degrees) <= 1


    def __check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatch("ring mismatch: " + repr(self.ring) + " vs " + repr(other.ring))


    def __coerce(self, other):
        if isinstance(other, int):
            return self.ring.constant(other)
        self.__check_ring(other)
        return other


    def __add__(self, other):
        other = self.__coerce(other)
        p = self.ring.field.modulus
        terms = dict(self._terms)
        for exps, c in other._terms.items():
            s = (terms.get(exps, 0) + c) % p
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return Polynomial(self.ring, terms, normalized=True)


    __radd__ = __add__


    def __neg__(self):
        p = self.ring.field.modulus
        return Polynomial(self.ring, {e: p - c for e, c in self._terms.items()}, normalized=True)


    def __sub__(self, other):
        return self + (-self.__coerce(other))


    def __rsub__(self, other):
        return self.__coerce(other) - self


    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self.__check_ring(other)
        p = self.ring.field.modulus
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = mono_mul(e1, e2)
                terms[e] = (terms.get(e, 0) + c1 * c2) % p
        return Polynomial(self.ring, {e: c for e, c in terms.items() if c}, normalized=True)


    __rmul__ = __mul__


    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


    def scale(self, c):
        p = self.ring.field.modulus
        c = c % p
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {e: (v * c) % p for e, v in self._terms.items()}, normalized=True)


    def mul_term(self, c, exps):
        """multiplies by the term c * x^exps"""
        p = self.ring.field.modulus
        c = c % p
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {mono_mul(e, exps): (v * c) % p for e, v in self._terms.items()}, normalized=True)


    def monic(self):
        if not self._terms:
            return self
        return self.scale(self.ring.field.inverse(self.leading_coefficient()))


    def divide_exact(self, divisor):
        """the quotient self / divisor; raises ValueError when divisor does not divide self"""
        self.__check_ring(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.ring.field
        lm = divisor.leading_monomial()
        inv = field.inverse(divisor.leading_coefficient())
        quotient = {}
        rest = self
        while not rest.is_zero():
            rlm = rest.leading_monomial()
            if not mono_divides(lm, rlm):
                raise ValueError("division is not exact")
            exps = mono_quotient(rlm, lm)
            c = field.mul(rest.leading_coefficient(), inv)
            quotient[exps] = c
            rest = rest - divisor.mul_term(c, exps)
        return Polynomial(self.ring, quotient)


    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms


    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash


    def __str__(self):
        if not self._terms:
            return "0"
        field = self.ring.field
        out = ""
        for exps in self.exponents():
            c = field.symmetric(self._terms[exps])
            factors = []
            for name, e in zip(self.ring.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(name + "^" + str(e))
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = str(magnitude) + "*" + "*".join(factors)
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out


    def __repr__(self):
        return "Polynomial(" + str(self) + ")"


def poly_add(a, b):
    """normalized sum of two polynomials of the same ring"""
    return a + b


def poly_mul(a, b):
    """normalized product of two polynomials of the same ring"""
    return a * b
