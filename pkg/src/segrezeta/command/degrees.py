#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from segrezeta.command.command import Command
from segrezeta.vogel.projectivedegrees import projective_degrees


class Degrees(Command):
    """projective degrees g_0..g_n"""

    name = "degrees"

    def execute(self, ideals):
        g = projective_degrees(ideals[0], self.settings.trials, self.settings.seed,
                               saturation=self.settings.saturation)
        return g.to_dict()
