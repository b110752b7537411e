#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import math

from segrezeta.core.errors import PreconditionViolation


def binomial_conv(m, k):
    """binomial coefficient with the boundary convention
    binom(m, -1) = 0 for m >= 0 and binom(-1, -1) = 1.

    This convention makes the i = 0 term of the Segre/Vogel transforms
    pick up the j = 0 entry and nothing else."""
    if m < -1 or k < -1:
        raise PreconditionViolation("binomial arguments must be >= -1, got (" + str(m) + ", " + str(k) + ")")
    if k == -1:
        return 1 if m == -1 else 0
    if m == -1:
        # keeps Pascal's rule valid at m = 0
        return 0
    return math.comb(m, k)
