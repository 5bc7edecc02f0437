"""Exception hierarchy shared by every posetcalc module."""


class PosetCalcError(Exception):
    pass


class InvalidPoset(PosetCalcError):
    pass


class NotBounded(InvalidPoset):
    pass


class NotGraded(InvalidPoset):
    pass


class CyclicCovers(InvalidPoset):
    pass


class UnknownElement(InvalidPoset):
    pass


class RankTooLarge(InvalidPoset):
    pass


class NotComparable(PosetCalcError):
    pass


class InvalidChain(PosetCalcError):
    pass


class TrivialPoset(PosetCalcError):
    pass


class DegreeMismatch(PosetCalcError):
    pass


class WordTooLong(PosetCalcError):
    pass


class ZeroDegree(PosetCalcError):
    pass


class IndexOutOfRange(PosetCalcError):
    pass


class InexactDivision(ArithmeticError, PosetCalcError):
    pass


class DenseTableTooLarge(PosetCalcError):
    pass


class MissingLabel(PosetCalcError):
    pass


class NotMaximalChain(PosetCalcError):
    pass


class NotAnRLabeling(PosetCalcError):
    pass


class NegativeLabel(PosetCalcError):
    pass


class ParseError(PosetCalcError):
    pass
