"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Exponent arithmetic and closed-form bounds for the restricted Bohnenblust-Hille inequality."""

import math

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from bhlab.bhutils.utils.exceptions import DomainViolation, MissingArgument

LOG_KHINCHINE = math.log(2.0 / math.sqrt(math.pi))


def as_fraction(value):
    """
    Exact rational for ints, Fractions and decimal-looking floats (1.5 -> 3/2).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise DomainViolation("d", value, "must be finite")
        return Fraction(repr(value))
    return Fraction(str(value))


@dataclass(frozen=True)
class ExponentData:
    m: int
    d: Fraction
    bh_exponent: Fraction
    bayart_exponent: Fraction
    theta: Fraction

    def identity_holds(self):
        return 1 / self.bh_exponent == self.theta / self.bayart_exponent + (1 - self.theta) / 2

    def as_floats(self):
        return {
            "bh_exponent": float(self.bh_exponent),
            "bayart_exponent": float(self.bayart_exponent),
            "theta": float(self.theta),
        }


def _check_m_d_(m, d):
    if int(m) != m or m < 1:
        raise DomainViolation("m", m, "must be a positive integer")
    if not 0 < d <= m:
        raise DomainViolation("d", d, "requires 0 < d <= m")


def exponents(m, d):
    """
    Bohnenblust-Hille exponent 2m/(m+1), Bayart exponent 2d/(1+d) and theta = d/m, exactly.
    """
    d = as_fraction(d)
    _check_m_d_(m, d)
    m = int(m)
    data = ExponentData(m, d, Fraction(2 * m, m + 1), 2 * d / (1 + d), d / m)
    if not data.identity_holds():
        raise DomainViolation("d", d, "interpolation identity failed")
    return data


@dataclass(frozen=True)
class BoundValue:
    value: float
    exponential: float
    constant: float
    khinchine: float

    @property
    def factors(self):
        return {"exponential": self.exponential, "constant": self.constant, "khinchine": self.khinchine}

    def to_dict(self):
        return dict(value=self.value, **self.factors)


def theorem_bound(m, d, C):
    """
    e^d (C m m!)^(d/m) (2/sqrt(pi))^((m-1)d/m), evaluated in log space.
    """
    if d == 0:
        return BoundValue(1.0, 1.0, 1.0, 1.0)
    _check_m_d_(m, d)
    if not C > 0:
        raise DomainViolation("C", C, "must be positive")
    m, d = int(m), float(d)
    log_exponential = d
    log_constant = (d / m) * (math.log(C) + math.log(m) + math.lgamma(m + 1))
    log_khinchine = ((m - 1) * d / m) * LOG_KHINCHINE
    return BoundValue(math.exp(log_exponential + log_constant + log_khinchine),
                      math.exp(log_exponential), math.exp(log_constant), math.exp(log_khinchine))


@dataclass(frozen=True)
class ComparisonBounds:
    m: int
    delta_M_bound: Optional[float] = None
    classical_bound: Optional[float] = None
    asymptotic_bound: Optional[float] = None

    def to_dict(self):
        return {
            "m": self.m,
            "delta_M_bound": self.delta_M_bound,
            "classical_bound": self.classical_bound,
            "asymptotic_bound": self.asymptotic_bound,
        }


def comparison_bounds(m, M=None, eps=None, kappa=None, C=None, d=None):
    """
    The bounds the theorem is compared with; only the requested ones are filled in.

    delta_M_bound = 2^(M/2) m^((M+1)/2) for polynomials with at most M variables per monomial,
    classical_bound = kappa (1+eps)^m, asymptotic_bound = (2C/sqrt(pi))^d m^d.
    """
    if int(m) != m or m < 1:
        raise DomainViolation("m", m, "must be a positive integer")
    delta_m = classical = asymptotic = None
    if M is not None:
        if not 1 <= M <= m:
            raise DomainViolation("M", M, "requires 1 <= M <= m")
        delta_m = 2.0 ** (M / 2.0) * float(m) ** ((M + 1) / 2.0)
    if (eps is None) != (kappa is None):
        raise MissingArgument("kappa" if kappa is None else "eps")
    if eps is not None:
        if not eps > 0 or not kappa > 0:
            raise DomainViolation("eps, kappa", (eps, kappa), "must be positive")
        classical = kappa * (1.0 + eps) ** m
    if (C is None) != (d is None):
        raise MissingArgument("d" if d is None else "C")
    if C is not None:
        if not C > 0 or not d > 0:
            raise DomainViolation("C, d", (C, d), "must be positive")
        asymptotic = math.exp(d * (math.log(2.0 * C / math.sqrt(math.pi)) + math.log(m)))
    return ComparisonBounds(int(m), delta_m, classical, asymptotic)


def chain_constant(m, d, C):
    """
    m! m (2/sqrt(pi))^(m-1) C e^m: bounds the Bayart-exponent coefficient norm by ||P||.
    """
    _check_m_d_(m, d)
    if not C > 0:
        raise DomainViolation("C", C, "must be positive")
    m = int(m)
    return math.exp(math.lgamma(m + 1) + math.log(m) + (m - 1) * LOG_KHINCHINE + math.log(C) + m)
