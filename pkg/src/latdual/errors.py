"""Exception types shared across the toolkit."""


class LatdualError(Exception):
    """Base class for every error raised by this package."""


class BadInput(LatdualError):
    """Malformed arguments that violate a documented precondition."""


class UnknownElement(LatdualError):
    """A reference to an element or point that does not exist."""


class NotAPartialOrder(LatdualError):
    """The supplied order pairs contain a cycle."""


class NotALattice(LatdualError):
    """Some pair of elements lacks a meet or a join."""


class NoBounds(LatdualError):
    """The order has no global bottom or top."""


class SortMismatch(LatdualError):
    """A sorted value was used where the other sort was required."""


class IndexOutOfRange(LatdualError):
    """An argument-place index outside the relation's arity."""


class ScaleExceeded(LatdualError):
    """The structure is too large for the requested exhaustive computation."""


class NotGaloisInput(LatdualError):
    """An operation on Galois sets received a set that is not stable/co-stable."""


class NotClosed(LatdualError):
    """A relation section is not the upper closure of a single point."""


class NotSeparated(LatdualError):
    """The frame's derived preorders are not antisymmetric."""


class SectionNotGalois(LatdualError):
    """A section of a Galois dual relation fails to be a Galois set."""


class AxiomViolation(LatdualError):
    """A construction requires frame axioms that the input does not satisfy."""

    def __init__(self, failures):
        self.failures = list(failures)
        ids = ", ".join(c.id for c in self.failures)
        super().__init__(f"frame axioms violated: {ids}")


class InvalidHomomorphism(LatdualError):
    """The supplied map is not a homomorphism of lattice expansions."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__(f"{len(self.violations)} broken preservation equations")


class PreconditionFailed(LatdualError):
    """An operation's stated precondition does not hold for the input."""


class DocumentError(LatdualError):
    """Base class for document parsing problems."""


class DocumentSyntaxError(DocumentError):
    """The file is not well-formed JSON."""

    def __init__(self, line, col, message):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, column {col}: {message}")


class DocumentSemanticError(DocumentError):
    """The document is well-formed but internally inconsistent."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")
