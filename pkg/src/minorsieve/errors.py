"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """A configured search or memory cap was hit.

    Raised instead of silently truncating: a partial closure or a partial
    canonical search would produce wrong answers that look right.
    """


class CatalogError(RuntimeError):
    """A catalog construction failed its own consistency checks.

    This means the code and the embedded expected values disagree, which is
    always a bug in one of them; it is never a recoverable condition.
    """


class EdgeListParseError(ValueError):
    """Malformed edge-list text; carries a human-readable position hint."""


class Graph6ParseError(ValueError):
    """Malformed graph6 line: byte outside the format's alphabet,
    truncated bit stream, or trailing garbage."""
