"""Exception hierarchy shared by all modules."""


class SturmrcError(ValueError):
    """Base class for every error raised by this package."""


# exact
class ZeroDenominator(SturmrcError, ZeroDivisionError):
    pass


class UnsupportedRadicand(SturmrcError):
    pass


class MixedRadicands(SturmrcError):
    pass


# words
class RationalSlope(SturmrcError):
    pass


class InvalidSpec(SturmrcError):
    pass


class NotPalindromicPrefix(SturmrcError):
    pass


class InsufficientLength(SturmrcError):
    pass


# christoffel
class NotChristoffel(SturmrcError):
    pass


class NotCoprime(SturmrcError):
    pass


class TrivialWord(SturmrcError):
    pass


class NotComposable(SturmrcError):
    pass


# morphisms
class AlphabetMismatch(SturmrcError):
    pass


class NotApplicable(SturmrcError):
    pass


class PrefixMismatch(SturmrcError):
    pass


class InsufficientOccurrences(SturmrcError):
    pass


# rcfact
class AbelianIncomparable(SturmrcError):
    """No Abelian equivalent nonempty prefixes were found.

    On a finite prefix this can never be definitive: a very late first cut
    looks exactly like no cut at all, so ``definitive`` is always False.
    """

    definitive = False


class ReversalMismatch(SturmrcError):
    pass


class KindMismatch(SturmrcError):
    pass


class NotTernary(SturmrcError):
    pass


class FirstTermIsV(SturmrcError):
    pass


class NoAdjacentPair(SturmrcError):
    pass


# iet
class OutOfDomain(SturmrcError):
    pass


class NoHits(SturmrcError):
    pass


class MissingLetter(SturmrcError):
    pass


class RareTerm(SturmrcError):
    pass
