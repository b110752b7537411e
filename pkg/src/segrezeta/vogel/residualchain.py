#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import logging

from segrezeta.core.errors import GenericityFailure
from segrezeta.cycles.cycleclass import CycleClass
from segrezeta.groebner.ideal import Ideal
from segrezeta.groebner.operations import ideal_sum, saturate_by_ideal
from segrezeta.hilbert.hilbert import dim_degree
from segrezeta.vogel.vogeldata import ProjectiveDegrees, VogelData


def residual_chain(sections, saturation="quotient"):
    """runs the intersection algorithm on one set of generic sections.

    B_0 = (0) : I^infinity. For i >= 1 the section s_i cuts B_(i-1), the
    part of the cut supported on V(I) is removed by saturation, and the
    residual B_i is what remains:

        C_i = B_(i-1) + (s_i),  B_i = C_i : I^infinity

    The Vogel degree nu_i is the O(1)-degree of the removed part of
    dimension n - i, that is d * deg(B_(i-1)) - deg(B_i).

    @param sections GenericSections
    @param saturation saturation method, see saturate_by_poly
    @return VogelData of this single run, including the chain B_0, B_1, ...
    @raise GenericityFailure when a cut or a residual has the wrong dimension
    """
    ideal = sections.source_ideal
    ring = ideal.ring
    n = ring.nvars - 1
    d = sections.degree

    residual = saturate_by_ideal(Ideal.zero(ring), ideal, saturation)
    chain = [residual]
    if residual.is_unit():
        # V(I) is all of P^n
        nu = [1] + [0] * n
        g = ProjectiveDegrees(tuple([0] * (n + 1)), d, 1, sections.seed)
        return VogelData(CycleClass(n, nu), g, d, tuple(chain))

    g = [1]
    nu = [0]
    for i in range(1, n + 1):
        if residual.is_unit():
            g.append(0)
            nu.append(d * g[i - 1])
            continue
        if i > len(sections.sections):
            raise GenericityFailure("residual " + str(residual) + " is not empty after all " + str(len(sections.sections)) + " sections",
                                    step=i, seed=sections.seed)

        cut = ideal_sum(residual, Ideal(ring, [sections.sections[i - 1]]))
        cut_dim, cut_degree = dim_degree(cut)
        if cut_dim != n - i or cut_degree != d * g[i - 1]:
            raise GenericityFailure("section " + str(i) + " is not generic: cut has dimension " + str(cut_dim)
                                    + " and degree " + str(cut_degree) + ", expected " + str(n - i) + " and " + str(d * g[i - 1]),
                                    step=i, seed=sections.seed)

        residual = saturate_by_ideal(cut, ideal, saturation)
        chain.append(residual)
        res_dim, res_degree = dim_degree(residual)
        if res_dim > n - i or (0 <= res_dim < n - i):
            raise GenericityFailure("residual " + str(i) + " has dimension " + str(res_dim) + ", expected " + str(n - i),
                                    step=i, seed=sections.seed)
        if res_dim == -1 and not residual.is_unit():
            # only irrelevant components are left
            residual = Ideal.unit(ring)
        g_i = res_degree if res_dim == n - i else 0
        g.append(g_i)
        nu.append(d * g[i - 1] - g_i)

    logging.debug("residual chain with seed " + str(sections.seed) + ": g = " + str(g) + ", nu = " + str(nu))
    return VogelData(CycleClass(n, nu), ProjectiveDegrees(tuple(g), d, 1, sections.seed), d, tuple(chain))
