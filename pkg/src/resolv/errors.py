"""Exception types shared across the package."""


class ResolvError(Exception):
    """Base class for all package-specific errors."""


class ResourceLimitError(ResolvError):
    """A computation would exceed a configured size cap."""


class SchemaError(ResolvError):
    """A document violates the wire format. Carries the offending field path."""

    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


class ValidationError(SchemaError):
    """A structurally well-formed document violates a type invariant.

    Collects every breach so callers can report them all at once.
    """

    def __init__(self, breaches):
        self.breaches = list(breaches)
        first = self.breaches[0] if self.breaches else ("$", "invalid")
        super().__init__(first[0], first[1])
        self.args = ("; ".join(f"{p}: {m}" for p, m in self.breaches),)

    def __str__(self):
        return "; ".join(f"{p}: {m}" for p, m in self.breaches)
