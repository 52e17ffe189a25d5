"""Exception hierarchy shared by all engines.

``MathRefusal`` subclasses mark inputs outside a formula's domain; the CLI maps
them to exit code 1. ``InputError`` subclasses mark malformed input (exit 2).
"""


class KwallError(Exception):
    pass


class InputError(KwallError):
    pass


class MathRefusal(KwallError):
    pass


class ParseError(InputError):
    pass


class GradingError(InputError):
    pass


class SingularMatrix(MathRefusal):
    pass


class EliminationError(MathRefusal):
    pass


class ZeroForm(MathRefusal):
    pass


class RangeError(MathRefusal):
    pass


class ParityError(MathRefusal):
    pass


class UnknownWalls(MathRefusal):
    def __init__(self, d: int):
        super().__init__(f"no wall data beyond the first wall for d={d}")
        self.d = d


class AmbientMismatch(MathRefusal):
    pass


class NotProportional(KwallError):
    # should never fire; signals an engine bug
    pass


class NotQuasihomogeneous(MathRefusal):
    pass
