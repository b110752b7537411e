#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from segrezeta.command.command import Command
from segrezeta.vogel.projectivedegrees import vogel_degrees


class Vogel(Command):
    """Vogel degrees nu_0..nu_n"""

    name = "vogel"

    def execute(self, ideals):
        data = vogel_degrees(ideals[0], self.settings.trials, self.settings.seed,
                             saturation=self.settings.saturation, trace=self.trace)
        return data.to_dict()
