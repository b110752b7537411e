#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________


class SegreZetaError(Exception):
    """parent class for all errors reported by segrezeta"""

    exit_code = 1
    kind = "error"

    def __init__(self, message, **details):
        """creates an error

        @param message human readable description
        @param details additional machine readable information for the JSON error object
        """
        super().__init__(message)
        self.message = message
        self.details = details


    def to_dict(self):
        """machine readable error object"""
        result = {"error": self.kind, "message": self.message, "exit_code": self.exit_code}
        result.update(self.details)
        return result


class ParseError(SegreZetaError):
    """syntax or semantic error in an ideal file"""

    exit_code = 2
    kind = "parse"

    def __init__(self, message, line=None, column=None):
        super().__init__(message, line=line, column=column)
        self.line = line
        self.column = column


    def __str__(self):
        if self.line is None:
            return self.message
        return "error:" + str(self.line) + ":" + str(self.column) + ": " + self.message


class GenericityFailure(SegreZetaError):
    """random scalars did not behave like generic ones"""

    exit_code = 3
    kind = "genericity"


class NegativeNumerator(GenericityFailure):
    """a zeta numerator with a negative coefficient was computed"""

    kind = "negative_numerator"


class NotStabilized(SegreZetaError):
    """the zeta numerator changed when the ambient dimension was increased"""

    exit_code = 4
    kind = "not_stabilized"


class PreconditionViolation(SegreZetaError):
    """an operation was called with arguments outside of its domain"""

    exit_code = 5
    kind = "precondition"


class RingMismatch(PreconditionViolation):
    """operands live in different polynomial rings"""

    kind = "ring_mismatch"


class ConfigurationError(PreconditionViolation):
    """invalid value in segrezeta.ini or on the command line"""

    kind = "configuration"
