#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import logging

from segrezeta.core.errors import PreconditionViolation
from segrezeta.groebner.operations import ideal_power, ideal_product, is_subideal


def rees_certificate(ideal, over, n_max=6):
    """smallest n <= n_max with I * J^n = J^(n+1), proving that J is integral over I.

    @param ideal I
    @param over J, containing I
    @return the exponent n, or None when there is none up to n_max
    """
    if not is_subideal(ideal, over):
        raise PreconditionViolation("rees certificate needs I contained in J: " + str(ideal) + " is not in " + str(over))
    if n_max < 1:
        raise PreconditionViolation("n_max must be >= 1, got " + str(n_max))

    power = over
    for n in range(1, n_max + 1):
        following = ideal_power(over, n + 1)
        # I * J^n is always contained in J^(n+1)
        if is_subideal(following, ideal_product(ideal, power)):
            logging.debug("rees certificate found at n = " + str(n))
            return n
        logging.debug("no rees certificate at n = " + str(n))
        power = following
    return None


def verify_rees_certificate(ideal, over, n):
    """re-checks I * J^n = J^(n+1) for a recorded exponent"""
    power = ideal_power(over, n)
    following = ideal_power(over, n + 1)
    product = ideal_product(ideal, power)
    return is_subideal(following, product) and is_subideal(product, following)
