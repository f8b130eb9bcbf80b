"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Multi-index tuples, exponent vectors and monomial index sets."""

import math

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Optional, Tuple

from bhlab.bhutils.utils.constants import MAX_INDEX
from bhlab.bhutils.utils.exceptions import DuplicateMonomial, InvalidIndexTuple

MultiIndexTuple = Tuple[int, ...]


def check_tuple(entries, m=None):
    """
    Validate a multi-index tuple and return it as a tuple of ints.
    """
    try:
        entries = tuple(int(entry) for entry in entries)
    except (TypeError, ValueError):
        raise InvalidIndexTuple(entries, "entries must be integers")
    if len(entries) == 0:
        raise InvalidIndexTuple(entries, "length must be at least 1")
    if m is not None and len(entries) != m:
        raise InvalidIndexTuple(entries, "length must be %d" % m)
    for entry in entries:
        if entry < 1:
            raise InvalidIndexTuple(entries, "entries must be positive")
        if entry > MAX_INDEX:
            raise InvalidIndexTuple(entries, "entries must fit in 64 bits")
    return entries


def canonicalize(entries):
    """
    Sorted representative of the monomial of `entries`.
    """
    return tuple(sorted(check_tuple(entries)))


@dataclass(frozen=True)
class ExponentVector:
    """
    Sparse multi-exponent: sorted (variable, exponent) pairs with positive exponents.
    """
    items: Tuple[Tuple[int, int], ...]
    degree: int = field(init=False)

    def __post_init__(self):
        items = tuple(sorted((int(var), int(exp)) for var, exp in self.items))
        if not items:
            raise InvalidIndexTuple(items, "exponent vector must be nonempty")
        variables = [var for var, _ in items]
        if len(set(variables)) != len(variables):
            raise InvalidIndexTuple(items, "repeated variable")
        for var, exp in items:
            if var < 1 or exp < 1:
                raise InvalidIndexTuple(items, "variables and stored exponents must be positive")
        object.__setattr__(self, 'items', items)
        object.__setattr__(self, 'degree', sum(exp for _, exp in items))

    @classmethod
    def from_mapping(cls, exponents):
        return cls(tuple((var, exp) for var, exp in dict(exponents).items() if exp != 0))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.items)

    @property
    def variables(self):
        return tuple(var for var, _ in self.items)

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)


def tuple_to_exponent(entries) -> ExponentVector:
    """
    Exponent vector whose exponents are the multiplicities of the entries.
    """
    return ExponentVector(tuple(Counter(check_tuple(entries)).items()))


def exponent_to_tuple(alpha: ExponentVector) -> MultiIndexTuple:
    """
    Canonical tuple listing each variable as many times as its exponent.
    """
    entries = []
    for var, exp in alpha.items:
        entries.extend([var] * exp)
    return tuple(entries)


def weight(alpha: ExponentVector) -> int:
    """
    Number of distinct variables of the monomial.
    """
    return len(alpha.items)


def multi_factorial(alpha: ExponentVector) -> int:
    """
    alpha! = product of the factorials of the exponents.
    """
    result = 1
    for _, exp in alpha.items:
        result *= math.factorial(exp)
    return result


class IndexSet:
    """
    Finite set of slot-ordered m-tuples, one representative per monomial.

    Tuples keep their raw slot order; monomial identity uses the sorted form.
    """

    def __init__(self, m, tuples: Iterable, label: Optional[str] = None):
        m = int(m)
        if m < 1:
            raise InvalidIndexTuple((), "degree m must be at least 1")
        self.m = m
        self.label = label
        by_monomial = {}
        for entries in tuples:
            entries = check_tuple(entries, m)
            key = tuple(sorted(entries))
            if key in by_monomial:
                raise DuplicateMonomial(entries)
            by_monomial[key] = entries
        self._tuples = tuple(sorted(by_monomial.values()))
        self._tuple_set = frozenset(self._tuples)
        self._monomials = {key: by_monomial[key] for key in sorted(by_monomial)}

    @property
    def tuples(self) -> Tuple[MultiIndexTuple, ...]:
        """
        Raw tuples in lexicographic order.
        """
        return self._tuples

    def __len__(self):
        return len(self._tuples)

    def __iter__(self) -> Iterator[MultiIndexTuple]:
        return iter(self._tuples)

    def __contains__(self, entries):
        return tuple(entries) in self._tuple_set

    def __eq__(self, other):
        if not isinstance(other, IndexSet):
            return NotImplemented
        return self.m == other.m and self._tuples == other._tuples

    def __hash__(self):
        return hash((self.m, self._tuples))

    def __repr__(self):
        return "IndexSet(m=%d, size=%d, label=%r)" % (self.m, len(self), self.label)

    def monomials(self) -> Dict[MultiIndexTuple, MultiIndexTuple]:
        """
        Map from canonical tuple to the raw representative.
        """
        return dict(self._monomials)

    def representative(self, canonical):
        return self._monomials.get(tuple(canonical))

    def exponent_vectors(self):
        """
        Gamma_Lambda in lexicographic order of canonical tuples.
        """
        return [tuple_to_exponent(key) for key in self._monomials]

    def supports(self):
        """
        Sorted list of the values taken in each slot.
        """
        return [sorted({entries[slot] for entries in self._tuples}) for slot in range(self.m)]

    def permute_slots(self, permutation):
        """
        Same tuples with slots reordered: new slot k holds old slot permutation[k].
        """
        permutation = tuple(permutation)
        if sorted(permutation) != list(range(self.m)):
            raise InvalidIndexTuple(permutation, "not a permutation of the %d slots" % self.m)
        return IndexSet(self.m, (tuple(entries[k] for k in permutation) for entries in self._tuples),
                        label=self.label)

    def union(self, other, label=None):
        """
        Union of two index sets of the same degree; shared monomials keep this set's representative.
        """
        if other.m != self.m:
            raise InvalidIndexTuple((other.m,), "cannot join index sets of degree %d and %d" % (self.m, other.m))
        merged = dict(other.monomials())
        merged.update(self._monomials)
        return IndexSet(self.m, merged.values(), label=label)
