#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from segrezeta.command.command import Command
from segrezeta.parser.idealfile import format_ideal


class Show(Command):
    """the parsed ideal and its reduced Groebner basis"""

    name = "show"

    def execute(self, ideals):
        ideal = ideals[0]
        return {
            "ideal": format_ideal(ideal),
            "generator_degrees": list(ideal.generator_degrees),
            "reduced_gb": [str(g) for g in ideal.reduced_gb()],
        }


    def parameters(self):
        return {"characteristic": self.settings.characteristic}
