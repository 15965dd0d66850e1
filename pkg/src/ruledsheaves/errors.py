"""Exception hierarchy shared by the library and the command line tool."""


class RuledSheavesError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedSurfaceError(RuledSheavesError):
    """The surface lies outside the modelled family (e.g. negative e)."""


class DimensionMismatchError(RuledSheavesError, ValueError):
    """A divisor class does not have one coordinate per Picard generator."""


class NoBlowdownError(RuledSheavesError):
    """A blowdown was requested on a geometrically ruled surface."""


class NormalizationError(RuledSheavesError):
    """Chern data is not normalized as the requested step requires."""


class HypothesisError(RuledSheavesError):
    """An operation was called outside its stated hypotheses (e.g. rank < 2)."""


class IntegralityError(RuledSheavesError, ArithmeticError):
    """An exact halving in Riemann-Roch produced a non-integer.

    This can only happen through a bug or corrupted input; valid integral
    Chern data always gives integral Euler characteristics.
    """


class WindowError(RuledSheavesError):
    """The splitting-type enumeration window misses the generic type."""


class AuditFailure(RuledSheavesError):
    """A dimension audit equality failed."""

    def __init__(self, failures):
        self.failures = list(failures)
        lines = [f"{a.name} [step {a.step}]: {a.expected} != {a.actual}" for a in self.failures]
        super().__init__("dimension audit failed:\n  " + "\n  ".join(lines))


class ConfigError(RuledSheavesError, ValueError):
    """Malformed configuration text."""

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
