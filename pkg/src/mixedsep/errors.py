"""Exception types raised by graph construction, queries and parsing."""


class GraphError(ValueError):
    """Base class for every input error this package raises."""


class SelfLoop(GraphError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex!r}")


class MalformedVertexName(GraphError):
    def __init__(self, name, reason):
        self.name = name
        super().__init__(f"malformed vertex name {name!r}: {reason}")


class UnknownVertex(GraphError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex!r}")


class OverlappingSets(GraphError):
    def __init__(self, shared):
        self.shared = frozenset(shared)
        super().__init__(f"query sets overlap in {sorted(self.shared)}")


class InstanceTooLarge(GraphError):
    def __init__(self, edges, bound):
        self.edges = edges
        self.bound = bound
        super().__init__(f"graph has {edges} edges, oracle bound is {bound}")


class ParseError(GraphError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class CriterionDisagreement(RuntimeError):
    """Two decision procedures returned different verdicts for one query."""
