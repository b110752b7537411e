#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from segrezeta.command.command import Command
from segrezeta.segre.segre import segre_degrees


class Segre(Command):
    """Segre degrees s_0..s_n of V(I) in P^n"""

    name = "segre"

    def execute(self, ideals):
        result = segre_degrees(ideals[0], self.settings.trials, self.settings.seed,
                               saturation=self.settings.saturation, trace=self.trace)
        return result.to_dict()
