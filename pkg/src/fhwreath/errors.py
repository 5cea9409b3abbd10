"""Exception taxonomy shared across the package."""

from __future__ import annotations


class FHWreathError(Exception):
    """Base class for all package errors."""


# -- group construction ------------------------------------------------------

class NotAssociative(FHWreathError, ValueError):
    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"multiplication table is not associative at triple {triple}")


class NoIdentity(FHWreathError, ValueError):
    def __init__(self):
        super().__init__("multiplication table has no two-sided identity")


class NotInvertible(FHWreathError, ValueError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


# -- partitions / partition-valued functions ---------------------------------

class NotContained(FHWreathError, ValueError):
    """Multiset subtraction of parts that are not present."""


class DegreeMismatch(FHWreathError, ValueError):
    """Comparison of partition data of different total degree."""


class TooShort(FHWreathError, ValueError):
    """Composition length smaller than the number of parts to place."""


class RangeTooLarge(FHWreathError, ValueError):
    """Composition enumeration beyond the supported size bound."""


class UnknownClass(FHWreathError, KeyError):
    """Partition-valued function indexed by a class the group does not have."""


# -- wreath elements ---------------------------------------------------------

class GroupMismatch(FHWreathError, ValueError):
    """Wreath element refers to colors outside the base group."""


class TooSmall(FHWreathError, ValueError):
    """A modified type does not fit into the requested number of points."""


# -- brute-force class algebra ------------------------------------------------

class NotRealizable(FHWreathError, ValueError):
    """Conjugacy class is empty at the requested number of points."""


class BudgetExceeded(FHWreathError, RuntimeError):
    def __init__(self, used, limit):
        self.used = used
        self.limit = limit
        super().__init__(f"enumeration budget exceeded: {used} > {limit} group operations")


# -- graded ring --------------------------------------------------------------

class BadCycle(FHWreathError, ValueError):
    """Single-cycle key with an invalid degree/class combination."""


class NonIntegralResult(FHWreathError, ArithmeticError):
    """A structure constant came out non-integral or negative (implementation bug)."""


class ExponentResidue(FHWreathError, ArithmeticError):
    """A rescaled coefficient retained a nonzero centralizer-order exponent."""


class SplitMismatch(FHWreathError, ValueError):
    """Class bijection does not preserve the real/complex split."""


# -- catalog groups -----------------------------------------------------------

class BadOrder(FHWreathError, ValueError):
    """Requested group order outside the family's parametrization."""


class ClosureOverflow(FHWreathError, RuntimeError):
    """Generator closure exceeded the expected group order by too much."""


# -- integer-valued polynomials ------------------------------------------------

class NotIntegerValued(FHWreathError, ValueError):
    """Fit produced non-integer binomial-basis coefficients."""


class InsufficientPoints(FHWreathError, ValueError):
    """Too few sample points for the requested fit."""


class Mismatch(FHWreathError, AssertionError):
    def __init__(self, n, expected, actual):
        self.n = n
        self.expected = expected
        self.actual = actual
        super().__init__(f"polynomial prediction falsified at n={n}: predicted {expected}, oracle {actual}")


# -- CLI -----------------------------------------------------------------------

class ParseError(FHWreathError, ValueError):
    """Malformed command-line literal or group specification."""
