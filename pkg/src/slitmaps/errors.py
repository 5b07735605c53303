"""Exception hierarchy."""


class MapError(ValueError):
    """Base class for invalid maps and invalid operations on maps."""


class NotPermutation(MapError):
    pass


class IotaHasFixedPoint(MapError):
    pass


class Disconnected(MapError):
    pass


class LabelCountMismatch(MapError):
    pass


class ParseError(MapError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ChainMismatch(MapError):
    pass


class NotALoop(MapError):
    pass


class NotOnLoop(MapError):
    pass


class LoopNotSimple(MapError):
    pass


class LoopContractible(MapError):
    pass


class DecompositionInvalid(MapError):
    pass


class NoNoncontractibleLoop(MapError):
    pass


class NotUnicellular(MapError):
    pass


class NotGenusOne(MapError):
    pass


class NotInDomain(MapError):
    pass


class NotInCodomain(MapError):
    pass


class CodomainViolation(AssertionError):
    """An image fell outside its claimed codomain (internal consistency)."""


class PreconditionViolated(MapError):
    pass


class MarksNotOdd(MapError):
    pass


class NotATree(MapError):
    pass


class LoopNotInCovering(MapError):
    pass
