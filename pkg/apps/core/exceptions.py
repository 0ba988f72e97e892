"""
Exception hierarchy shared by every app

Library code raises these; the management commands translate them into
exit codes (see apps.cli.base).
"""


class GraphLinksError(Exception):
    """Base class for all library errors"""
    pass


class InvariantViolation(GraphLinksError):
    """A value breaks one of its type invariants"""

    def __init__(self, invariant: str, detail: str):
        self.invariant = invariant
        self.detail = detail
        super().__init__(f"{invariant}: {detail}")


class UnknownEdgeError(GraphLinksError, KeyError):
    """Edge id not present in the host graph"""

    def __init__(self, edge_id):
        self.edge_id = edge_id
        super().__init__(f"unknown edge {edge_id}")

    def __str__(self):
        return self.args[0]


class UnknownCrossingError(GraphLinksError, KeyError):
    """Crossing index out of range"""

    def __init__(self, crossing):
        self.crossing = crossing
        super().__init__(f"unknown crossing {crossing}")

    def __str__(self):
        return self.args[0]


class UnknownArcError(GraphLinksError, KeyError):
    """Arc index out of range"""

    def __init__(self, arc):
        self.arc = arc
        super().__init__(f"unknown arc {arc}")

    def __str__(self):
        return self.args[0]


class IncompleteStateError(GraphLinksError):
    """State does not assign a smoothing to every crossing"""
    pass


class SameArcError(GraphLinksError):
    """R2 insertion requested on a single arc"""
    pass


class InvalidColoringError(GraphLinksError):
    """Face coloring is not a proper checkerboard coloring"""
    pass


class NotColorableError(GraphLinksError):
    """Diagram has no checkerboard coloring where one is required"""
    pass


class LimitExceededError(GraphLinksError):
    """Instance is larger than the configured enumeration limit"""
    pass


class FormatError(GraphLinksError):
    """Syntax error in a graph or diagram file"""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class FileValidationError(GraphLinksError):
    """Input file failed validation before parsing"""
    pass
