"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Structured index set families: full, Delta_M, prime/arithmetic diagonals, triangle."""

import itertools

import sympy

from bhlab.bhindex.indexset import IndexSet
from bhlab.bhutils.utils.constants import MAX_INDEX
from bhlab.bhutils.utils.exceptions import DomainViolation, IndexRangeError


def _check_positive_(name, value):
    if int(value) != value or value < 1:
        raise DomainViolation(name, value, "must be a positive integer")
    return int(value)


def gen_full(m, N):
    """
    Every monomial of degree m in the variables 1..N.
    """
    m = _check_positive_("m", m)
    N = _check_positive_("N", N)
    return IndexSet(m, itertools.combinations_with_replacement(range(1, N + 1), m),
                    label="full m=%d N=%d" % (m, N))


def gen_delta_M(m, M, N):
    """
    Monomials of degree m in 1..N using at most M distinct variables.
    """
    m = _check_positive_("m", m)
    M = _check_positive_("M", M)
    N = _check_positive_("N", N)
    if M > m:
        raise DomainViolation("M", M, "must not exceed m=%d" % m)
    tuples = (entries for entries in itertools.combinations_with_replacement(range(1, N + 1), m)
              if len(set(entries)) <= M)
    return IndexSet(m, tuples, label="deltaM m=%d M=%d N=%d" % (m, M, N))


def gen_prime_diagonal(m, T):
    """
    Tuples (p_1^i, ..., p_m^i) for i = 1..T, p_j the j-th prime.
    """
    m = _check_positive_("m", m)
    T = _check_positive_("T", T)
    primes = [int(sympy.prime(j)) for j in range(1, m + 1)]
    tuples = []
    for i in range(1, T + 1):
        row = []
        for j, prime in enumerate(primes, start=1):
            value = prime ** i
            if value > MAX_INDEX:
                raise IndexRangeError(j, i)
            row.append(value)
        tuples.append(tuple(row))
    return IndexSet(m, tuples, label="prime-diagonal m=%d T=%d" % (m, T))


def gen_arith_diagonal(m, T):
    """
    Tuples ((i-1)m+1, ..., (i-1)m+m) for i = 1..T; overflow-free twin of the prime diagonal.
    """
    m = _check_positive_("m", m)
    T = _check_positive_("T", T)
    if (T - 1) * m + m > MAX_INDEX:
        raise IndexRangeError(m, T)
    tuples = [tuple((i - 1) * m + j for j in range(1, m + 1)) for i in range(1, T + 1)]
    return IndexSet(m, tuples, label="arith-diagonal m=%d T=%d" % (m, T))


def cantor_pair(a, b):
    return (a + b) * (a + b + 1) // 2 + b


def triangle_label(slot, a, b):
    """
    Injection N x N -> N for slot 1, 2 or 3; the three images are disjoint residue classes mod 3.
    """
    return 3 * cantor_pair(a, b) + (slot - 1)


def gen_triangle(R):
    """
    Tuples (s1(i,j), s2(j,k), s3(k,i)) for i, j, k in 1..R.
    """
    R = _check_positive_("R", R)
    if triangle_label(3, R, R) > MAX_INDEX:
        raise IndexRangeError(3, R)
    tuples = []
    for i, j, k in itertools.product(range(1, R + 1), repeat=3):
        tuples.append((triangle_label(1, i, j), triangle_label(2, j, k), triangle_label(3, k, i)))
    return IndexSet(3, tuples, label="triangle R=%d" % R)


def is_triangle_family(index_set):
    return bool(index_set.label) and index_set.label.startswith("triangle")
