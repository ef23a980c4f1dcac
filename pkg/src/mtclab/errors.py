"""Exception hierarchy shared by every mtclab module."""

from __future__ import annotations


class MtcError(Exception):
    """Base class. ``line`` is set when the error was raised while reading an MTD file."""

    line: int | None = None


class VertexNotFound(MtcError, KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"unknown vertex {self.vertex!r}"


class UnsupportedBound(MtcError, ValueError):
    pass


class InvalidExclusion(MtcError, ValueError):
    pass


class SameVertex(MtcError, ValueError):
    pass


class PartitionError(MtcError, ValueError):
    """Empty, overlapping or mismatched partite sets."""


class _PairError(MtcError, ValueError):
    def __init__(self, u, v):
        super().__init__(u, v)
        self.u = u
        self.v = v

    def __str__(self):
        return f"{type(self).__name__}({self.u}, {self.v})"


class MissingCrossArc(_PairError):
    pass


class DoubleOrientation(_PairError):
    pass


class IntraPartArc(_PairError):
    pass


class TooFewParts(MtcError, ValueError):
    def __init__(self, k):
        super().__init__(k)
        self.k = k

    def __str__(self):
        return f"TooFewParts({self.k}): a multipartite tournament needs at least 3 partite sets"


class EnumerationTooLarge(MtcError, ValueError):
    pass


class VertexSetMismatch(MtcError, ValueError):
    pass


class NotLoose(MtcError, ValueError):
    pass


class InstanceTooLarge(MtcError, ValueError):
    pass


class UnknownTheorem(MtcError, KeyError):
    def __str__(self):
        return f"unknown theorem id {self.args[0]!r}"


class ConfigError(MtcError, ValueError):
    pass


class MtdSyntaxError(MtcError, ValueError):
    def __init__(self, line: int | None, message: str):
        super().__init__(line, message)
        self.line = line
        self.message = message

    def __str__(self):
        where = f"line {self.line}: " if self.line is not None else ""
        return f"{where}{self.message}"
