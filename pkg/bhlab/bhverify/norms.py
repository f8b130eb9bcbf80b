"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Mixed norms, the Bayart aggregation and the exact steps of the proof chain."""

import math

from dataclasses import dataclass

import numpy as np

from bhlab.bhindex.indexset import exponent_to_tuple
from bhlab.bhutils.utils.exceptions import DomainViolation, MissingMonomial
from bhlab.bhverify.bounds import exponents


@dataclass(frozen=True)
class StepCheck:
    lhs: float
    rhs: float
    margin: float

    def to_dict(self):
        return {"lhs": self.lhs, "rhs": self.rhs, "margin": self.margin}


def lp_norm(values, p):
    """
    (sum |v|^p)^(1/p), scaled by the largest modulus to stay finite.
    """
    moduli = np.abs(np.asarray(values, dtype=complex))
    if moduli.size == 0:
        return 0.0
    top = float(moduli.max())
    if top == 0.0:
        return 0.0
    return top * float(np.sum((moduli / top) ** float(p)) ** (1.0 / float(p)))


def _margin_(lhs, rhs):
    if rhs == 0.0:
        return 0.0 if lhs == 0.0 else math.inf
    return lhs / rhs


def mixed_norm_lhs(T, k):
    """
    l1 over the k-th index (1-based) of the l2 norms over the other indices.
    """
    if int(k) != k or not 1 <= k <= T.m:
        raise DomainViolation("k", k, "slot must lie in 1..%d" % T.m)
    if len(T) == 0:
        return 0.0
    squares = np.zeros(len(T.slot_labels[k - 1]))
    np.add.at(squares, T.index[:, k - 1], np.abs(T.values) ** 2)
    return float(np.sqrt(squares).sum())


def bayart_lhs(T, index_set, d):
    """
    l_{2d/(1+d)} norm of the entries of T at the tuples of the index set.
    """
    if not d > 0:
        raise DomainViolation("d", d, "must be positive")
    p = 2.0 * d / (1.0 + d)
    return lp_norm([T.entry(entries) for entries in index_set.tuples], p)


def holder_chain_check(c, m, d):
    """
    ||c||_{2m/(m+1)} against ||c||_{2d/(1+d)}^theta ||c||_2^(1-theta).
    """
    data = exponents(m, d)
    c = np.asarray(list(c), dtype=complex)
    if c.size == 0:
        raise DomainViolation("c", c, "must be nonempty")
    theta = float(data.theta)
    lhs = lp_norm(c, float(data.bh_exponent))
    rhs = lp_norm(c, float(data.bayart_exponent)) ** theta * lp_norm(c, 2.0) ** (1.0 - theta)
    return StepCheck(lhs, rhs, _margin_(lhs, rhs))


def coefficient_step_check(P, T, index_set, d):
    """
    ||c(P)||_q against m! ||T on the index set||_q with q = 2d/(1+d); T is the
    symmetric tensor of P at the representative tuples.
    """
    data = exponents(P.m, d)
    q = float(data.bayart_exponent)
    entries = []
    for alpha in P.terms:
        raw = index_set.representative(exponent_to_tuple(alpha))
        if raw is None:
            raise MissingMonomial(exponent_to_tuple(alpha))
        entries.append(T.entry(raw))
    lhs = lp_norm(P.coefficients, q)
    rhs = math.factorial(P.m) * lp_norm(entries, q)
    return StepCheck(lhs, rhs, _margin_(lhs, rhs))
