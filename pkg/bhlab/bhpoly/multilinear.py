"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""m-linear forms, polarization and the symmetric form of a polynomial."""

import itertools
import math

import numpy as np
from sympy.utilities.iterables import multiset_permutations

from bhlab.bhindex.indexset import check_tuple, exponent_to_tuple, multi_factorial
from bhlab.bhutils.utils.exceptions import ArityMismatch, MissingMonomial


class MultilinearForm:
    """
    T(x_1, ..., x_m) = sum over finitely many ordered tuples t of a_t x_1[t_1] ... x_m[t_m].
    """

    def __init__(self, m, entries):
        self.m = int(m)
        kept = {}
        for entries_key, value in entries.items():
            key = check_tuple(entries_key, self.m)
            value = complex(value)
            if value != 0:
                kept[key] = kept.get(key, 0j) + value
        self._entries = {key: kept[key] for key in sorted(kept) if kept[key] != 0}
        self.slot_labels = [sorted({key[slot] for key in self._entries}) for slot in range(self.m)]
        positions = [{var: pos for pos, var in enumerate(labels)} for labels in self.slot_labels]
        self.index = np.array([[positions[slot][key[slot]] for slot in range(self.m)] for key in self._entries],
                              dtype=np.intp).reshape(len(self._entries), self.m)
        self.values = np.array(list(self._entries.values()), dtype=complex)

    @property
    def entries(self):
        return dict(self._entries)

    def entry(self, key):
        return self._entries.get(tuple(key), 0j)

    def __len__(self):
        return len(self._entries)

    def __repr__(self):
        return "MultilinearForm(m=%d, entries=%d)" % (self.m, len(self))

    def evaluate_slots(self, slot_vectors):
        """
        T at per-slot arrays indexed like `slot_labels`.
        """
        product = self.values.copy()
        for slot, vector in enumerate(slot_vectors):
            product *= np.asarray(vector)[self.index[:, slot]]
        return complex(product.sum())


def evaluate_form(T, vectors):
    """
    T at m vectors given as mappings variable -> complex; absent coordinates are zero.
    """
    if len(vectors) != T.m:
        raise ArityMismatch(T.m, len(vectors))
    slot_vectors = [np.array([complex(vector.get(var, 0)) for var in labels], dtype=complex)
                    for vector, labels in zip(vectors, T.slot_labels)]
    return T.evaluate_slots(slot_vectors)


def polarize_eval(P, args):
    """
    The symmetric m-linear form of P at `args` by the signed 2^m polarization sum.
    """
    m = P.m
    if len(args) != m:
        raise ArityMismatch(m, len(args))
    X = np.array([[complex(vector.get(var, 0)) for var in P.variable_support] for vector in args],
                 dtype=complex).reshape(m, len(P.variable_support))
    signs = np.array(list(itertools.product((1.0, -1.0), repeat=m)))
    values = P.evaluate_points(signs @ X)
    return complex(np.sum(np.prod(signs, axis=1) * values) / (2 ** m * math.factorial(m)))


def _tensor_entry_(coefficient, alpha, m):
    return coefficient * multi_factorial(alpha) / math.factorial(m)


def symmetric_tensor(P, on=None):
    """
    Values of the symmetric form of P at basis tuples: c_alpha * alpha! / m!.

    With an index set the entries sit at its representative tuples; without one,
    at every ordering of every monomial.
    """
    if on is None:
        return full_symmetric_tensor(P)
    if on.m != P.m:
        raise ArityMismatch(P.m, on.m)
    entries = {}
    for alpha, coefficient in P.terms.items():
        canonical = exponent_to_tuple(alpha)
        raw = on.representative(canonical)
        if raw is None:
            raise MissingMonomial(canonical)
        entries[raw] = _tensor_entry_(coefficient, alpha, P.m)
    return MultilinearForm(P.m, entries)


def full_symmetric_tensor(P):
    entries = {}
    for alpha, coefficient in P.terms.items():
        value = _tensor_entry_(coefficient, alpha, P.m)
        for ordering in multiset_permutations(list(exponent_to_tuple(alpha))):
            entries[tuple(ordering)] = value
    return MultilinearForm(P.m, entries)
