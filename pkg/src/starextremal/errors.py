"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so the classes are kept
separate even where a bare ValueError would otherwise do.
"""


class ParameterError(ValueError):
    """An argument is outside its documented range."""


class EmptyDomainError(ValueError):
    """The requested minimum degree is too large: no graph without the
    property can have that minimum degree, so the search space is empty."""


class PropertyDomainError(ValueError):
    """A property decider was asked about a graph below the minimum
    vertex count for which the property is defined for complete graphs."""


class DegreeListError(ValueError):
    """A degree list is not usable (e.g. odd degree sum at t = 1)."""


class FamilySizeError(ValueError):
    """A family enumeration would exceed the caller-supplied cap."""


class Graph6Error(ValueError):
    """Malformed graph6 text.  ``offset`` is the byte position of the
    first offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class BudgetExceededError(RuntimeError):
    """A verification run hit its time budget before completing."""
