#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import heapq
import logging

from segrezeta.arith.monomial import mono_coprime, mono_divides, mono_lcm, mono_quotient, mono_mul
from segrezeta.arith.polynomial import Polynomial


def reduce_polynomial(f, basis):
    """full reduction of f by a list of monic polynomials.

    @param f polynomial
    @param basis monic polynomials of the same ring
    @return the remainder; no term of it is divisible by a leading monomial of basis
    """
    ring = f.ring
    p = ring.field.modulus
    key = ring.order.key
    leads = [(g.leading_monomial(), g) for g in basis if not g.is_zero()]
    work = dict(f.items())
    remainder = {}
    while work:
        lm = max(work, key=key)
        c = work[lm]
        for glm, g in leads:
            if mono_divides(glm, lm):
                shift = mono_quotient(lm, glm)
                for exps, gc in g.items():
                    e = mono_mul(exps, shift)
                    v = (work.get(e, 0) - c * gc) % p
                    if v:
                        work[e] = v
                    else:
                        work.pop(e, None)
                break
        else:
            remainder[lm] = c
            del work[lm]
    return Polynomial(ring, remainder, normalized=True)


def s_polynomial(f, g):
    """S-polynomial of two monic polynomials"""
    lcm = mono_lcm(f.leading_monomial(), g.leading_monomial())
    return (f.mul_term(1, mono_quotient(lcm, f.leading_monomial()))
            - g.mul_term(1, mono_quotient(lcm, g.leading_monomial())))


def _criterion_chain(i, j, lcm, leads, pending):
    """Buchberger's chain criterion: the pair (i, j) is superfluous if some
    third leading monomial divides lcm and both pairs through it were
    already treated"""
    for k, lmk in enumerate(leads):
        if k == i or k == j:
            continue
        if mono_divides(lmk, lcm) and (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def groebner_basis(polynomials):
    """reduced Groebner basis of the ideal generated by the given polynomials
    with respect to the monomial order of their ring.

    Plain Buchberger algorithm with the product and chain criteria and an
    S-pair queue ordered by the degree of the lcm.

    @param polynomials polynomials of one common ring
    @return monic, autoreduced basis sorted by descending leading monomial
    """
    polynomials = [f for f in polynomials if not f.is_zero()]
    if not polynomials:
        return []
    ring = polynomials[0].ring
    if any(f.is_constant() for f in polynomials):
        return [ring.one()]

    basis = []
    leads = []
    pending = set()
    queue = []
    counter = 0

    def add(h):
        nonlocal counter
        h = h.monic()
        index = len(basis)
        basis.append(h)
        lm = h.leading_monomial()
        leads.append(lm)
        for k in range(index):
            lcm = mono_lcm(leads[k], lm)
            pending.add((k, index))
            heapq.heappush(queue, (sum(lcm), counter, k, index))
            counter = counter + 1

    for f in sorted(polynomials, key=lambda f: f.degree()):
        h = reduce_polynomial(f, basis)
        if not h.is_zero():
            if h.is_constant():
                return [ring.one()]
            add(h)

    while queue:
        _, _, i, j = heapq.heappop(queue)
        pending.discard((i, j))
        lm_i, lm_j = leads[i], leads[j]
        if mono_coprime(lm_i, lm_j):
            continue
        lcm = mono_lcm(lm_i, lm_j)
        if _criterion_chain(i, j, lcm, leads, pending):
            continue
        h = reduce_polynomial(s_polynomial(basis[i], basis[j]), basis)
        if not h.is_zero():
            if h.is_constant():
                return [ring.one()]
            add(h)

    logging.debug("Buchberger: " + str(len(basis)) + " elements before interreduction in " + repr(ring))
    return interreduce(basis)


def interreduce(basis):
    """minimal, autoreduced and monic form of a Groebner basis"""
    key = basis[0].ring.order.key if basis else None
    minimal = []
    for g in sorted(basis, key=lambda g: key(g.leading_monomial())):
        lm = g.leading_monomial()
        if not any(mono_divides(h.leading_monomial(), lm) for h in minimal):
            minimal.append(g)
    result = []
    for index, g in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        result.append(reduce_polynomial(g, others).monic())
    result.sort(key=lambda g: key(g.leading_monomial()), reverse=True)
    return result
