#!/usr/bin/env python

"""Errors raised by tropfano.

All precondition failures derive from TropFanoError, a ValueError,
so code written against plain ValueError keeps working."""

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


class TropFanoError(ValueError):
    """Base class of the precondition errors."""


class DegenerateInput(TropFanoError):
    """Matrix of insufficient rank, or all-infinite Plücker vector."""


class LoopsPresent(TropFanoError):
    """Operation needs a loopless matroid."""


class DegenerateSystem(TropFanoError):
    """Tropical polynomial with fewer than two finite terms."""


class OrbitMismatch(TropFanoError):
    """Infinite coordinates of a point differ from the orbit of a system."""


class NotPluecker(TropFanoError):
    """Vector violates the three-term tropical Plücker relations."""


class BadDimensions(TropFanoError):
    """Inconsistent dimensions (e.g. d >= e in an incidence system)."""


class OutOfScope(TropFanoError):
    """Input outside the range an algorithm supports."""


class NotSurjective(TropFanoError):
    """Labels of a Cayley structure miss some vertex of the simplex."""


class NotContained(TropFanoError):
    """A tropical linear space is not contained in a tropical variety."""


class Internal(TropFanoError, RuntimeError):
    """Failure that valid input should never trigger."""


class MalformedInput(TropFanoError):
    """JSON input that does not follow the expected schema."""
