#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from segrezeta.command.command import Command
from segrezeta.segre.zeta import zeta


class Zeta(Command):
    """Segre zeta function: numerator, denominator degrees and stabilization"""

    name = "zeta"

    def execute(self, ideals):
        z = zeta(ideals[0], self.settings.trials, self.settings.seed, self.settings.saturation)
        payload = z.to_dict()
        payload["rational_function"] = str(z)
        return payload
