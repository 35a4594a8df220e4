"""Exception types shared across the calculator."""


class CoincalcError(Exception):
    """Base class for all calculator errors."""


class DescriptorError(CoincalcError, ValueError):
    """A descriptor or query payload violates its documented invariants."""


class FactBaseError(CoincalcError, ValueError):
    """The fact-base file failed the linter.

    ``locations`` carries (line, message) pairs; line is None when the
    offending entry could not be located in the raw text.
    """

    def __init__(self, locations):
        self.locations = list(locations)
        lines = []
        for line, message in self.locations:
            prefix = f"line {line}: " if line is not None else ""
            lines.append(prefix + message)
        super().__init__("; ".join(lines))


class ConsistencyError(CoincalcError, RuntimeError):
    """Internal rule clash: overlapping rules disagree or an emitted
    bundle violates the inequality chain.  Signals a fact-base or rule
    bug, never a bad query."""
