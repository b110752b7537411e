#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import itertools
import logging

from segrezeta.arith.monomial import BlockOrder, mono_divides, mono_lcm, mono_quotient, monomials_of_degree
from segrezeta.arith.polynomial import PolynomialRing
from segrezeta.core.errors import PreconditionViolation, RingMismatch
from segrezeta.groebner.buchberger import groebner_basis
from segrezeta.groebner.ideal import Ideal

SATURATION_METHODS = ("quotient", "elimination")


def _check_same_ring(a, b):
    if a.ring != b.ring:
        raise RingMismatch("ring mismatch: " + repr(a.ring) + " vs " + repr(b.ring))


def _fresh_name(ring, stem):
    """a variable name that does not occur in ring"""
    name = stem
    i = 0
    while name in ring.variables:
        i = i + 1
        name = stem + str(i)
    return name


def reduced_gb(ideal):
    return ideal.reduced_gb()


def normal_form(f, ideal):
    return ideal.normal_form(f)


def ideal_sum(a, b):
    _check_same_ring(a, b)
    return Ideal(a.ring, a.generators + b.generators)


def ideal_product(a, b):
    """ideal generated by all products of generators"""
    _check_same_ring(a, b)
    products = {f * g for f in a.generators for g in b.generators}
    return Ideal(a.ring, sorted(products, key=str))


def ideal_power(ideal, n):
    """ideal generated by the products of all multisets of n generators"""
    if n < 1:
        raise PreconditionViolation("ideal power exponent must be >= 1, got " + str(n))
    products = set()
    for combination in itertools.combinations_with_replacement(ideal.generators, n):
        product = ideal.ring.one()
        for g in combination:
            product = product * g
        products.add(product)
    return Ideal(ideal.ring, sorted(products, key=str))


def is_subideal(a, b):
    """is a contained in b?"""
    _check_same_ring(a, b)
    return all(b.contains(g) for g in a.generators)


def ideal_equal(a, b):
    return is_subideal(a, b) and is_subideal(b, a)


def eliminate(ideal, keep_vars):
    """intersection of the ideal with the subring generated by keep_vars.

    @param ideal the ideal
    @param keep_vars variable names or indices to keep
    @return ideal of the same ring whose generators only involve keep_vars
    """
    ring = ideal.ring
    keep = [ring.variables.index(v) if isinstance(v, str) else v for v in keep_vars]
    drop = [i for i in range(ring.nvars) if i not in keep]
    if not drop:
        return Ideal(ring, ideal.reduced_gb())
    new_order = drop + keep
    elim_ring = PolynomialRing(ring.field, [ring.variables[i] for i in new_order], BlockOrder(len(drop)))
    positions = [new_order.index(i) for i in range(ring.nvars)]
    gb = groebner_basis([elim_ring.embed(g, positions) for g in ideal.generators])
    survivors = [g for g in gb if all(e[:len(drop)] == (0,) * len(drop) for e, _ in g.items())]
    return Ideal(ring, [ring.embed(g, new_order) for g in survivors])


def _with_auxiliary_variable(ring):
    """ring with one new variable in front, eliminated by a block order"""
    name = _fresh_name(ring, "t")
    aux = PolynomialRing(ring.field, (name,) + ring.variables, BlockOrder(1))
    positions = list(range(1, ring.nvars + 1))
    return aux, positions


def _drop_auxiliary(ring, gb):
    back = [0] + list(range(ring.nvars))
    return [ring.embed(g, back) for g in gb if all(e[0] == 0 for e, _ in g.items())]


def intersect(a, b):
    """intersection of two ideals via elimination of t from t*a + (1-t)*b"""
    _check_same_ring(a, b)
    ring = a.ring
    if a.is_zero() or b.is_zero():
        return Ideal.zero(ring)
    aux, positions = _with_auxiliary_variable(ring)
    t = aux.variable(0)
    gens = [t * aux.embed(f, positions) for f in a.generators]
    gens += [(1 - t) * aux.embed(g, positions) for g in b.generators]
    return Ideal(ring, _drop_auxiliary(ring, groebner_basis(gens)))


def ideal_quotient(ideal, f):
    """the colon ideal (ideal : f) = {g : g*f in ideal}"""
    if f.is_zero():
        raise PreconditionViolation("colon by the zero polynomial")
    if f.ring != ideal.ring:
        raise RingMismatch("polynomial " + str(f) + " is not in " + repr(ideal.ring))
    if f.is_constant():
        return ideal
    if ideal.is_zero():
        return ideal
    if ideal.is_monomial() and f.is_monomial():
        m = f.leading_monomial()
        return Ideal(ideal.ring, [ideal.ring.monomial(mono_quotient(mono_lcm(g.leading_monomial(), m), m))
                                  for g in ideal.generators])
    meet = intersect(ideal, Ideal(ideal.ring, [f]))
    return Ideal(ideal.ring, [g.divide_exact(f) for g in meet.generators])


def saturate_by_poly(ideal, f, method="quotient"):
    """the saturation (ideal : f^infinity)

    @param method "quotient" iterates colon ideals until they stabilize,
                  "elimination" uses ideal + (1 - t*f) and eliminates t
    """
    if method == "elimination":
        return saturate_by_poly_elimination(ideal, f)
    if method != "quotient":
        raise PreconditionViolation("unknown saturation method \"" + str(method) + "\". Supported: " + ", ".join(SATURATION_METHODS))
    current = ideal
    steps = 0
    while True:
        following = ideal_quotient(current, f)
        steps = steps + 1
        if is_subideal(following, current):
            logging.debug("saturation by " + str(f) + " stabilized after " + str(steps) + " colon steps")
            return current
        current = Ideal(ideal.ring, following.reduced_gb())


def saturate_by_poly_elimination(ideal, f):
    """the saturation (ideal : f^infinity) via one auxiliary variable"""
    if f.is_zero():
        raise PreconditionViolation("saturation by the zero polynomial")
    if f.is_constant():
        return ideal
    ring = ideal.ring
    aux, positions = _with_auxiliary_variable(ring)
    t = aux.variable(0)
    gens = [aux.embed(g, positions) for g in ideal.generators]
    gens.append(1 - t * aux.embed(f, positions))
    return Ideal(ring, _drop_auxiliary(ring, groebner_basis(gens)))


def saturate_by_ideal(ideal, other, method="quotient"):
    """the saturation (ideal : other^infinity), the intersection of the
    saturations by the generators of other"""
    _check_same_ring(ideal, other)
    if other.is_zero():
        raise PreconditionViolation("saturation by the zero ideal")
    if other.is_unit():
        return ideal
    result = None
    for g in other.generators:
        part = saturate_by_poly(ideal, g, method)
        if part.is_unit():
            continue
        result = part if result is None else intersect(result, part)
    if result is None:
        return Ideal.unit(ideal.ring)
    return result


def irrelevant_ideal(ring):
    return Ideal(ring, ring.gens())


def saturate_irrelevant(ideal, method="quotient"):
    """the saturation by the irrelevant ideal, the representative of the ideal sheaf"""
    return saturate_by_ideal(ideal, irrelevant_ideal(ideal.ring), method)


def graded_dim(ideal, v):
    """dimension of the degree-v piece of a homogeneous ideal

    Counts the monomials of degree v that are divisible by a leading
    monomial of the reduced Groebner basis."""
    if v < 0:
        raise PreconditionViolation("degree must be >= 0, got " + str(v))
    leads = ideal.lead_monomials()
    return sum(1 for m in monomials_of_degree(ideal.ring.nvars, v) if any(mono_divides(lm, m) for lm in leads))
