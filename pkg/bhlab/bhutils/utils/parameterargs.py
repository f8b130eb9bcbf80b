"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Manage command line and magic parameters."""

from enum import Enum

from bhlab.bhutils.utils.exceptions import InvalidParameterType, MissingArgument


class Family(Enum):
    """
    Index set families produced by `bhlab gen`.
    """
    FULL = "full"
    DELTA_M = "deltaM"
    PRIME_DIAGONAL = "prime-diagonal"
    ARITH_DIAGONAL = "arith-diagonal"
    TRIANGLE = "triangle"


class PsiMode(Enum):
    EXACT = "exact"
    GREEDY = "greedy"


class FitMethod(Enum):
    LEAST_SQUARES = "least_squares"
    ENDPOINT = "endpoint"


class Distribution(Enum):
    """
    Coefficient distributions for random polynomials.
    """
    STEINHAUS = "steinhaus"
    GAUSSIAN = "gaussian"


class ReportFormat(Enum):
    JSON = "json"
    CSV = "csv"


def to_enum(enum_class, value):
    """
    Convert a raw value into a member of `enum_class`.
    """
    if isinstance(value, enum_class):
        return value
    try:
        return enum_class(value)
    except ValueError:
        allowed = ", ".join(member.value for member in enum_class)
        raise InvalidParameterType("Invalid %s %r. Only %s are supported." % (enum_class.__name__, value, allowed))


class ParameterArgs:
    """
    Manage parsed subcommand parameters.
    """

    def __init__(self, args):
        self.args = args

    def get(self, key):
        """
            Get parameter value.
        """
        if hasattr(self.args, key):
            param_value = getattr(self.args, key)
        else:
            raise MissingArgument(key)

        return param_value

    def require(self, key):
        """
            Get a parameter that must have been supplied.
        """
        value = self.get(key)
        if value is None:
            raise MissingArgument("--" + key.replace("_", "-"))
        return value

    def get_enum(self, key, enum_class):
        return to_enum(enum_class, self.require(key))
