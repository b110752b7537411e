#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from dataclasses import dataclass, field
from enum import Enum


class Status(Enum):
    INTEGRAL = "Integral"
    NOT_INTEGRAL = "NotIntegral"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    """outcome of the integral dependence test for I contained in J.

    evidence holds the Rees exponent, the zeta witness or the reason why
    the test was inconclusive. by_zeta marks Integral verdicts that rest on
    the randomized zeta comparison only."""

    status: Status
    evidence: dict
    parameters: dict
    by_zeta: bool = False
    zetas: tuple = field(default=None, compare=False)

    def to_dict(self):
        result = {"status": self.status.value, "evidence": self.evidence, "parameters": self.parameters,
                  "by_zeta": self.by_zeta}
        if self.zetas is not None:
            result["zeta"] = [z.to_dict() for z in self.zetas]
        return result
