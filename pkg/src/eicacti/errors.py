"""Exception hierarchy shared by every module."""

from __future__ import annotations


class EIError(Exception):
    """Base class for all errors raised by eicacti."""


class InvalidGraph(EIError, ValueError):
    pass


class InvalidHypergraph(EIError, ValueError):
    pass


class NotThreeUniform(EIError):
    pass


class NotAFusion(EIError):
    pass


class NotACactus(EIError):
    pass


class NotATree(EIError):
    pass


class InternalInvariantViolation(EIError, AssertionError):
    """A structural invariant failed; indicates a bug, never bad input."""


class CertificationError(InternalInvariantViolation):
    """A construction produced a hypergraph whose EI differs from the target."""

    def __init__(self, message: str, missing=(), extra=()):
        super().__init__(message)
        self.missing = missing
        self.extra = extra


# gadget preconditions


class GadgetError(EIError, ValueError):
    pass


class CycleTooShort(GadgetError):
    pass


class PathTooShort(GadgetError):
    pass


class StarTooSmall(GadgetError):
    pass


class DegreeTooLow(GadgetError):
    pass


class HelperNotNeighbor(GadgetError):
    pass


class NoNeighborHelper(GadgetError):
    pass


class HelperClash(GadgetError):
    pass


class VertexCollision(GadgetError):
    pass


class BaseTooSmall(GadgetError):
    pass


# synthesis outcomes


class NotRepresentable(EIError):
    """The graph is known not to be the EI of any 3-uniform hypergraph."""


class ExceptionalTree(NotRepresentable):
    def __init__(self, name: str):
        super().__init__(f"tree is exceptional ({name}) and has no 3-uniform witness")
        self.name = name


class UnsupportedByTheorem(EIError):
    """Cactus with circumference <= 4 whose limbs are all exceptional."""


class VertexSetMismatch(EIError):
    pass


# oracle


class BudgetExhausted(EIError):
    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


class GraphTooLarge(EIError):
    pass


# io / generation


class ParseError(EIError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class GenerationFailed(EIError):
    pass
