#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________


class Command:
    """parent class for all commands"""

    name = None
    arity = 1

    def __init__(self, settings, trace=False):
        """constructs a Command

        @param settings Settings of this run
        @param trace include the residual chain in the result
        """
        self.settings = settings
        self.trace = trace


    def execute(self, ideals):
        """runs the command

        @param ideals list of exactly `arity` Ideal objects
        @return payload dict of the result envelope
        """
        raise NotImplementedError()


    def parameters(self):
        """parameters recorded in the result envelope"""
        return self.settings.to_dict()
