"""Exception types shared by all modules."""


class MetasylvError(Exception):
    """Base class for all library errors."""


class MultiplicityError(MetasylvError):
    """A letter does not occur exactly m times."""


class AlphabetError(MetasylvError):
    """A letter falls outside the alphabet 1..n."""


class ShapeMismatch(MetasylvError):
    """Operands do not share the same (n, m) shape."""


class CodeRangeError(MetasylvError):
    """A code entry exceeds its positional bound."""


class InvalidChain(MetasylvError):
    """A list of permutations violates the chain invariants."""


class StabilityViolation(MetasylvError):
    """A closure theorem failed; this signals an implementation bug."""


class SizeLimit(MetasylvError):
    """The requested instance exceeds the configured size cap."""
