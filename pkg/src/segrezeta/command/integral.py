#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from segrezeta.command.command import Command
from segrezeta.integral.decision import decide_integral


class Integral(Command):
    """is the second ideal integral over the first one?"""

    name = "integral"
    arity = 2

    def execute(self, ideals):
        verdict = decide_integral(ideals[0], ideals[1], self.settings.n_max, self.settings.trials,
                                  self.settings.seed, self.settings.saturation)
        return verdict.to_dict()
