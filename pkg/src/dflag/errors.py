"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Problem in an input graph description.

    Carries the 1-based line number of the offending input line when the
    graph came from a text source, otherwise ``line`` is None.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ParseError(GraphInputError):
    """Malformed input line."""


class VertexRangeError(GraphInputError):
    """Vertex index outside [0, n)."""


class DuplicateEdgeError(GraphInputError):
    """The same edge was given twice."""


class LoopError(GraphInputError):
    """An edge of the form (v, v)."""


class ConfigError(ValueError):
    """Invalid or inconsistent run configuration."""


class SizeLimitError(RuntimeError):
    """A guarded operation refused an input that is too large."""
