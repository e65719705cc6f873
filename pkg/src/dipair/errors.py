"""Exception types shared across the package."""


class DipairError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class LoopsPresent(DipairError):
    """The complex admits a directed loop; path enumeration would not terminate."""


class BudgetExceeded(DipairError):
    """More directed paths exist than the enumeration budget allows."""

    def __init__(self, count, budget):
        super().__init__(f"path count {count} exceeds budget {budget}")
        self.count = count
        self.budget = budget


class UniquePathViolated(DipairError):
    """A graph operation requires at most one directed path between vertices."""


class NotAGraph(DipairError):
    """A graph operation was applied to a complex with cells of dimension > 1."""


class InputError(DipairError):
    """Malformed input file, point literal or builtin name (CLI exit status 2)."""
