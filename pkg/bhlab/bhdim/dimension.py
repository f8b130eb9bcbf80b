"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""psi profiles and log-log estimates of the combinatorial dimension."""

import io
import math

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import pandas as pd
from scipy import stats

from bhlab.bhdim.psi import psi_exact, psi_greedy
from bhlab.bhindex.families import is_triangle_family
from bhlab.bhutils.utils import Log, ResultSet
from bhlab.bhutils.utils.constants import DEFAULT_PSI_BUDGET, DEFAULT_PSI_RESTARTS
from bhlab.bhutils.utils.exceptions import (DimensionEstimateError, DomainViolation, InvalidParameterType,
                                            SearchBudgetExhausted, UndefinedLogarithm)
from bhlab.bhutils.utils.parameterargs import FitMethod, PsiMode, to_enum
from bhlab.bhutils.utils.utils import parallel_map

SLOPE_SLACK = 0.25

log = Log(__name__, 'dimension')


@dataclass(frozen=True)
class PsiProfile:
    n_values: Tuple[int, ...]
    psi_values: Tuple[int, ...]
    exact_flags: Tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, 'n_values', tuple(int(n) for n in self.n_values))
        object.__setattr__(self, 'psi_values', tuple(int(psi) for psi in self.psi_values))
        object.__setattr__(self, 'exact_flags', tuple(bool(flag) for flag in self.exact_flags))
        if not len(self.n_values) == len(self.psi_values) == len(self.exact_flags):
            raise DomainViolation("profile", len(self.n_values), "columns must have equal length")
        if any(b <= a for a, b in zip(self.n_values, self.n_values[1:])):
            raise DomainViolation("n_values", self.n_values, "must be strictly increasing")
        if any(b < a for a, b in zip(self.psi_values, self.psi_values[1:])):
            raise DomainViolation("psi_values", self.psi_values, "must be nondecreasing")

    def __len__(self):
        return len(self.n_values)

    def rows(self):
        return list(zip(self.n_values, self.psi_values, self.exact_flags))

    def to_resultset(self, displaylimit=100):
        rows = [(n, psi, "true" if exact else "false") for n, psi, exact in self.rows()]
        return ResultSet(["n", "psi", "exact"], rows, displaylimit=displaylimit)

    def to_dict(self):
        return {
            "n": list(self.n_values),
            "psi": list(self.psi_values),
            "exact": list(self.exact_flags),
        }


@dataclass(frozen=True)
class DimEstimate:
    slope: float
    intercept: float
    n_range: Tuple[int, int]
    method: FitMethod
    profile: PsiProfile
    rvalue: Optional[float] = None
    stderr: Optional[float] = None

    def to_dict(self):
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "n_range": list(self.n_range),
            "method": self.method.value,
            "rvalue": self.rvalue,
            "stderr": self.stderr,
            "profile": self.profile.to_dict(),
        }


def default_n_values(index_set, n_min, n_max):
    """
    The evaluation points for a window [n_min, n_max]: perfect squares for the
    triangle family when the window holds at least two of them, every integer otherwise.
    """
    if not 1 <= n_min < n_max:
        raise DomainViolation("n range", (n_min, n_max), "requires 1 <= n_min < n_max")
    if is_triangle_family(index_set):
        squares = [q * q for q in range(math.isqrt(n_min - 1) + 1, math.isqrt(n_max) + 1)]
        if len(squares) >= 2:
            return squares
    return list(range(n_min, n_max + 1))


def _psi_point_(index_set, n, mode, budget, restarts, seed, fallback):
    if mode is PsiMode.GREEDY:
        return psi_greedy(index_set, n, restarts=restarts, seed=seed), False
    try:
        return psi_exact(index_set, n, budget=budget), True
    except SearchBudgetExhausted as e:
        if not fallback:
            raise
        value = max(e.best, psi_greedy(index_set, n, restarts=restarts, seed=seed))
        log.info("n=%d falls back to a heuristic lower bound %d" % (n, value))
        return value, False


def psi_profile(index_set, n_values, mode=PsiMode.EXACT, budget=DEFAULT_PSI_BUDGET,
                restarts=DEFAULT_PSI_RESTARTS, seed=0, fallback=True):
    """
    psi at every n in `n_values`. Exact points whose search exceeds the budget are
    replaced by the best lower bound known and flagged inexact, or re-raised when
    `fallback` is off.
    """
    mode = to_enum(PsiMode, mode)
    n_values = [int(n) for n in n_values]
    points = parallel_map(lambda n: _psi_point_(index_set, n, mode, budget, restarts, seed, fallback),
                          n_values)
    psi_values, exact_flags = [], []
    running = 0
    for n, (value, exact) in zip(n_values, points):
        log.debug("psi(%d) = %d (%s)" % (n, value, "exact" if exact else "lower bound"))
        if value < running:
            # only heuristic points can fall below an earlier value
            value = running
        running = value
        psi_values.append(value)
        exact_flags.append(exact)
    return PsiProfile(n_values, psi_values, exact_flags)


def fit_dimension(profile, m, fit=FitMethod.LEAST_SQUARES):
    """
    Slope of log psi(n) against log n.
    """
    fit = to_enum(FitMethod, fit)
    for n, psi in zip(profile.n_values, profile.psi_values):
        if psi <= 0:
            raise UndefinedLogarithm(n)
    n_range = (profile.n_values[0], profile.n_values[-1])
    rvalue = stderr = None
    if fit is FitMethod.LEAST_SQUARES:
        if len(profile) < 2:
            raise DimensionEstimateError("A least squares fit needs at least two profile points.")
        result = stats.linregress(np.log(profile.n_values), np.log(profile.psi_values))
        slope, intercept = float(result.slope), float(result.intercept)
        rvalue, stderr = float(result.rvalue), float(result.stderr)
    else:
        n_max = profile.n_values[-1]
        if n_max < 2:
            raise DimensionEstimateError("The endpoint estimate needs n_max >= 2.")
        slope = math.log(profile.psi_values[-1]) / math.log(n_max)
        intercept = 0.0
    if slope > m + SLOPE_SLACK:
        raise DimensionEstimateError("Slope %.6g exceeds the degree %d." % (slope, m))
    return DimEstimate(slope, intercept, n_range, fit, profile, rvalue, stderr)


def estimate_dim(index_set, n_min=None, n_max=None, mode=PsiMode.EXACT, budget=DEFAULT_PSI_BUDGET,
                 fit=FitMethod.LEAST_SQUARES, restarts=DEFAULT_PSI_RESTARTS, seed=0, n_values=None):
    """
    Profile psi over a window of n and fit its growth exponent.

    Either give an explicit increasing list `n_values` or a window with 2 <= n_min < n_max.
    """
    if n_values is None:
        if n_min is None or n_max is None or not 2 <= n_min < n_max:
            raise DomainViolation("n range", (n_min, n_max), "requires 2 <= n_min < n_max")
        n_values = default_n_values(index_set, n_min, n_max)
    if len(index_set) == 0:
        raise UndefinedLogarithm(n_values[0])
    profile = psi_profile(index_set, n_values, mode=mode, budget=budget, restarts=restarts, seed=seed)
    estimate = fit_dimension(profile, index_set.m, fit)
    log.info("dimension estimate %.6g over n in [%d, %d]" % (estimate.slope, estimate.n_range[0],
                                                            estimate.n_range[1]))
    return estimate


def parse_profile(text):
    """
    Read a `n,psi,exact` CSV profile back into a PsiProfile.
    """
    try:
        frame = pd.read_csv(io.StringIO(text), true_values=["true"], false_values=["false"])
    except (ValueError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise InvalidParameterType("Malformed profile CSV: %s" % e)
    if list(frame.columns) != ["n", "psi", "exact"]:
        raise InvalidParameterType("Profile CSV header must be n,psi,exact.")
    if frame["exact"].dtype != bool:
        raise InvalidParameterType("Profile CSV column exact must hold true or false.")
    try:
        return PsiProfile(frame["n"].astype("int64").tolist(), frame["psi"].astype("int64").tolist(),
                          frame["exact"].tolist())
    except (TypeError, ValueError) as e:
        raise InvalidParameterType("Malformed profile CSV: %s" % e)
