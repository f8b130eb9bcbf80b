"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Exceptions for BHLab."""

import functools
import sys

from IPython import get_ipython

from .log import Log


class BHLabException(Exception):
    """
    Base class for every error raised by BHLab.
    """


class InvalidIndexTuple(BHLabException):
    """
    Exception for malformed multi-index tuples.
    """

    def __init__(self, entries, reason):
        self.entries = entries
        BHLabException.__init__(self, "Invalid index tuple %s: %s." % (entries, reason))


class DuplicateMonomial(BHLabException):
    """
    Exception when two tuples represent the same monomial.
    """

    def __init__(self, entries, line=None):
        self.entries = entries
        self.line = line
        if line is None:
            BHLabException.__init__(self, "Duplicate monomial %s." % (entries,))
        else:
            BHLabException.__init__(self, "Duplicate monomial %s at line %d." % (entries, line))


class IndexRangeError(BHLabException):
    """
    Exception when a generated variable index does not fit in 64 bits.
    """

    def __init__(self, j, i):
        self.j = j
        self.i = i
        BHLabException.__init__(self, "Variable index out of 64-bit range at (j=%d, i=%d)." % (j, i))


class IndexParseError(BHLabException):
    """
    Exception for malformed .idx input.
    """

    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        BHLabException.__init__(self, "Index set parse error at line %d: %s." % (line, reason))


class PolyParseError(BHLabException):
    """
    Exception for malformed .poly input.
    """

    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        BHLabException.__init__(self, "Polynomial parse error at line %d: %s." % (line, reason))


class SearchBudgetExhausted(BHLabException):
    """
    Exception when the psi search runs out of nodes. Carries the best lower bound.
    """

    def __init__(self, n, best, nodes):
        self.n = n
        self.best = best
        self.nodes = nodes
        BHLabException.__init__(self, "Search budget exhausted at n=%d after %d nodes; best lower bound %d."
                                % (n, nodes, best))


class UndefinedLogarithm(BHLabException):
    """
    Exception when a profile value is zero and its logarithm is undefined.
    """

    def __init__(self, n):
        self.n = n
        BHLabException.__init__(self, "psi(%d) = 0, logarithm undefined." % n)


class DimensionEstimateError(BHLabException):
    """
    Exception for dimension fits that violate their sanity bounds.
    """

    def __init__(self, message):
        BHLabException.__init__(self, message)


class MissingVariable(BHLabException):
    """
    Exception when a point does not define a variable the polynomial uses.
    """

    def __init__(self, variable):
        self.variable = variable
        BHLabException.__init__(self, "Point does not define variable x_%d." % variable)


class ArityMismatch(BHLabException):
    """
    Exception for argument lists of the wrong length.
    """

    def __init__(self, expected, actual):
        self.expected = expected
        self.actual = actual
        BHLabException.__init__(self, "Expected %d arguments, got %d." % (expected, actual))


class MissingMonomial(BHLabException):
    """
    Exception when a monomial of a polynomial has no representative tuple.
    """

    def __init__(self, entries):
        self.entries = entries
        BHLabException.__init__(self, "Monomial %s has no representative in the index set." % (entries,))


class DomainViolation(BHLabException):
    """
    Exception for parameters outside the domain of a formula.
    """

    def __init__(self, name, value, reason):
        self.name = name
        self.value = value
        BHLabException.__init__(self, "Invalid %s=%s: %s." % (name, value, reason))


class TrialFailed(BHLabException):
    """
    Exception wrapping an error raised inside one verification trial.
    """

    def __init__(self, trial, error):
        self.trial = trial
        self.error = error
        BHLabException.__init__(self, "Trial %d failed: %s: %s" % (trial, error.__class__.__name__, error))


class ReportWriteError(BHLabException):
    """
    Exception when a report destination cannot be written.
    """

    def __init__(self, destination, reason):
        self.destination = destination
        BHLabException.__init__(self, "Cannot write report to %s: %s" % (destination, reason))


class InvalidParameterType(BHLabException):
    """
    Exception for parameter type mismatch.
    """

    def __init__(self, message):
        BHLabException.__init__(self, message)


class MissingArgument(BHLabException):
    """
    Exception when dealing with missing arguments.
    """

    def __init__(self, param):
        BHLabException.__init__(self, "Missing required argument %s" % param)


def wrap_exceptions(function_name):
    """
    A decorator that wraps the passed in function and logs
    exceptions should one occur
    """

    @functools.wraps(function_name)
    def wrapper(*args, **kwargs):
        try:
            return function_name(*args, **kwargs)
        except Exception as error_msg:
            log = Log(function_name.__name__, 'wrap_exception')
            error_formatted_message = '{}: {}'.format(error_msg.__class__.__name__, error_msg)
            log.exception(error_formatted_message)
            if get_ipython() is not None:
                sys.stderr.write(error_formatted_message + "\n")
            raise
    return wrapper
