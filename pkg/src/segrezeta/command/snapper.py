#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from segrezeta.command.command import Command
from segrezeta.segre.snapper import snapper_fit


class Snapper(Command):
    """bigraded Hilbert function fit, checked against the projective degrees"""

    name = "snapper"

    def execute(self, ideals):
        fit = snapper_fit(ideals[0], self.settings.m_start, self.settings.n_start, self.settings.points,
                          self.settings.trials, self.settings.seed, self.settings.saturation)
        return fit.to_dict()


    def parameters(self):
        result = super().parameters()
        result.update({"m_start": self.settings.m_start, "n_start": self.settings.n_start, "points": self.settings.points})
        return result
