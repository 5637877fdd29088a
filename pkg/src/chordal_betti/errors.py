"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ChordalBettiError(ValueError):
    """Base class for all errors raised by chordal_betti."""


class LengthMismatch(ChordalBettiError):
    pass


class InfeasibleIntersection(ChordalBettiError):
    pass


class BadParentIndex(ChordalBettiError):
    pass


class OracleCapExceeded(ChordalBettiError):
    pass


class VoidDual(ChordalBettiError):
    """The Alexander dual of a full simplex has no faces at all."""


class BadRowRequest(ChordalBettiError):
    pass


class NegativeBetti(ChordalBettiError):
    """A closed formula produced a negative Betti number."""


class InternalMismatch(ChordalBettiError):
    pass


class RangeError(ChordalBettiError):
    pass


class UnknownIdentity(ChordalBettiError):
    pass
