#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from segrezeta.command.command import Command
from segrezeta.integral.decision import compare_numerical_invariants


class Compare(Command):
    """Segre, Vogel and projective degrees of two nested ideals side by side"""

    name = "compare"
    arity = 2

    def execute(self, ideals):
        comparison = compare_numerical_invariants(ideals[0], ideals[1], self.settings.trials,
                                                  self.settings.seed, self.settings.saturation)
        return comparison.to_dict()
