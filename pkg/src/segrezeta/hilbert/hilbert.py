#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import math
from dataclasses import dataclass

import sympy

from segrezeta.arith.monomial import minimalize_monomials, mono_coprime
from segrezeta.core.errors import PreconditionViolation

T = sympy.Symbol("t")
M = sympy.Symbol("m")


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series numerator, Hilbert polynomial, and the dimension and
    degree of Proj(R/I)"""

    numerator: sympy.Poly
    hilbert_polynomial: sympy.Expr
    proj_dim: int
    proj_degree: int


def _numerator(monomials, nvars):
    """numerator of the Hilbert series of R/M, computed by the pivot
    recursion h(M) = h(M + (x)) + t * h(M : x)"""
    gens = minimalize_monomials(monomials)
    if not gens:
        return sympy.Poly(1, T, domain="ZZ")
    if any(sum(g) == 0 for g in gens):
        return sympy.Poly(0, T, domain="ZZ")

    if all(mono_coprime(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]):
        result = sympy.Poly(1, T, domain="ZZ")
        for g in gens:
            result = result * sympy.Poly(1 - T**sum(g), T, domain="ZZ")
        return result

    # pivot on the variable occurring in most generators
    counts = [sum(1 for g in gens if g[i] > 0) for i in range(nvars)]
    pivot = max(range(nvars), key=lambda i: counts[i])
    x = tuple(1 if i == pivot else 0 for i in range(nvars))

    plus = [g for g in gens if g[pivot] == 0] + [x]
    colon = [tuple(e - 1 if i == pivot and e > 0 else e for i, e in enumerate(g)) for g in gens]
    return _numerator(plus, nvars) + sympy.Poly(T, T, domain="ZZ") * _numerator(colon, nvars)


def hilbert_series_monomial(ideal):
    """numerator h(t) of the Hilbert series h(t)/(1-t)^n of R/M for a
    monomial ideal M of a polynomial ring in n variables"""
    if not ideal.is_monomial():
        raise PreconditionViolation("Hilbert series by pivots needs monomial generators: " + str(ideal))
    return _numerator([g.leading_monomial() for g in ideal.generators], ideal.ring.nvars)


def monomial_numerator(monomials, nvars):
    """the same numerator for a list of exponent vectors"""
    return _numerator(list(monomials), nvars)


def hilbert_data(ideal):
    """Hilbert data of R/I, read from the lead ideal of the reduced basis"""
    nvars = ideal.ring.nvars
    h = _numerator(ideal.lead_monomials(), nvars)
    if h.is_zero:
        return HilbertData(h, sympy.Integer(0), -1, 0)

    # cancel the factors (1 - t) shared with the denominator
    krull = nvars
    q = h
    one_minus_t = sympy.Poly(1 - T, T, domain="ZZ")
    while krull > 0 and q.eval(1) == 0:
        q = sympy.exquo(q, one_minus_t)
        krull = krull - 1

    if krull == 0:
        return HilbertData(h, sympy.Integer(0), -1, 0)

    coefficients = list(reversed(q.all_coeffs()))
    polynomial = sympy.Integer(0)
    for i, c in enumerate(coefficients):
        # t^i / (1-t)^krull contributes binom(m - i + krull - 1, krull - 1)
        term = sympy.Integer(1)
        for j in range(1, krull):
            term = term * (M - i + j)
        polynomial = polynomial + c * term / math.factorial(krull - 1)
    polynomial = sympy.expand(polynomial)
    return HilbertData(h, polynomial, krull - 1, int(q.eval(1)))


def dim_degree(ideal):
    """(dimension, degree) of the projective scheme V(I); (-1, 0) when it is empty"""
    data = hilbert_data(ideal)
    return data.proj_dim, data.proj_degree
