"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Sparse m-homogeneous polynomials with complex coefficients."""

import math

import numpy as np

from bhlab.bhindex.indexset import ExponentVector, exponent_to_tuple, tuple_to_exponent
from bhlab.bhutils.utils.exceptions import DomainViolation, InvalidIndexTuple, MissingVariable
from bhlab.bhutils.utils.parameterargs import Distribution, to_enum
from bhlab.bhutils.utils.utils import make_rng


class SparsePolynomial:
    """
    P(x) = sum of c_alpha x^alpha over finitely many exponent vectors of degree m.

    Terms are kept in lexicographic order of their canonical tuples; exact zeros are dropped.
    """

    def __init__(self, m, terms):
        self.m = int(m)
        if self.m < 1:
            raise DomainViolation("m", m, "must be a positive integer")
        ordered = {}
        for alpha, coefficient in terms.items():
            if not isinstance(alpha, ExponentVector):
                alpha = ExponentVector.from_mapping(alpha)
            if alpha.degree != self.m:
                raise InvalidIndexTuple(alpha.items, "monomial degree %d differs from m = %d" % (alpha.degree, self.m))
            coefficient = complex(coefficient)
            if coefficient != 0:
                ordered[alpha] = coefficient
        self._terms = {alpha: ordered[alpha] for alpha in sorted(ordered, key=exponent_to_tuple)}
        self.variable_support = sorted({var for alpha in self._terms for var in alpha.variables})
        positions = {var: pos for pos, var in enumerate(self.variable_support)}
        self.exponents = np.zeros((len(self._terms), len(self.variable_support)), dtype=np.int64)
        for row, alpha in enumerate(self._terms):
            for var, exp in alpha.items:
                self.exponents[row, positions[var]] = exp
        self.coefficients = np.array(list(self._terms.values()), dtype=complex)

    @property
    def terms(self):
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    def __repr__(self):
        return "SparsePolynomial(m=%d, terms=%d)" % (self.m, len(self))

    def coefficient(self, alpha):
        if not isinstance(alpha, ExponentVector):
            alpha = ExponentVector.from_mapping(alpha)
        return self._terms.get(alpha, 0j)

    def scaled(self, factor):
        return SparsePolynomial(self.m, {alpha: factor * c for alpha, c in self._terms.items()})

    def evaluate_points(self, points):
        """
        Values at the rows of `points`, columns ordered as `variable_support`.
        """
        points = np.asarray(points, dtype=complex)
        if len(self) == 0:
            return np.zeros(points.shape[0], dtype=complex)
        monomials = np.prod(points[:, None, :] ** self.exponents[None, :, :], axis=2)
        return monomials @ self.coefficients

    def evaluate_phases(self, phases):
        """
        Values on the polytorus at the rows of `phases` (angles, one column per support variable).
        """
        phases = np.atleast_2d(np.asarray(phases, dtype=float))
        return np.exp(1j * (phases @ self.exponents.T)) @ self.coefficients


def evaluate(P, z):
    """
    P at the point z, a mapping from variable index to complex value.
    """
    total = 0j
    for alpha, coefficient in P.terms.items():
        value = coefficient
        for var, exp in alpha.items:
            if var not in z:
                raise MissingVariable(var)
            value *= complex(z[var]) ** exp
        total += value
    return total


def polynomial_from_coefficients(m, coefficients):
    """
    Build a polynomial from a mapping of (possibly unsorted) index tuples to coefficients.
    """
    terms = {}
    for entries, coefficient in coefficients.items():
        alpha = tuple_to_exponent(entries)
        if len(entries) != m:
            raise InvalidIndexTuple(entries, "length must be %d" % m)
        terms[alpha] = terms.get(alpha, 0j) + complex(coefficient)
    return SparsePolynomial(m, terms)


def random_polynomial(index_set, dist=Distribution.STEINHAUS, seed=0):
    """
    One random coefficient per monomial of the index set, drawn in lexicographic
    order of the canonical tuples.
    """
    dist = to_enum(Distribution, dist)
    if len(index_set) == 0:
        raise DomainViolation("index set", index_set, "must be nonempty")
    alphas = index_set.exponent_vectors()
    rng = make_rng(seed)
    if dist is Distribution.STEINHAUS:
        coefficients = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, size=len(alphas)))
    else:
        draws = rng.standard_normal((len(alphas), 2))
        coefficients = (draws[:, 0] + 1j * draws[:, 1]) / math.sqrt(2.0)
    return SparsePolynomial(index_set.m, dict(zip(alphas, coefficients)))


def coeff_norm(P, p):
    """
    (sum |c_alpha|^p)^(1/p).
    """
    if not p > 0:
        raise DomainViolation("p", p, "must be positive")
    moduli = np.abs(P.coefficients)
    if moduli.size == 0:
        return 0.0
    return float(np.sum(moduli ** p) ** (1.0 / p))
