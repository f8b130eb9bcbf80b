"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""psi_Lambda(n): the largest number of Lambda-tuples inside a product A_1 x ... x A_m, |A_t| <= n."""

import itertools

import numpy as np

from bhlab.bhutils.utils import Log
from bhlab.bhutils.utils.constants import DEFAULT_PSI_BUDGET, DEFAULT_PSI_RESTARTS
from bhlab.bhutils.utils.exceptions import DomainViolation, SearchBudgetExhausted
from bhlab.bhutils.utils.utils import make_rng, parallel_map

WARM_START_RESTARTS = 4

log = Log(__name__, 'psi')


class LabelTable:
    """
    Tuples of an index set rewritten as positions into the sorted support of each slot.
    """

    def __init__(self, index_set):
        self.m = index_set.m
        self.size = len(index_set)
        self.labels = index_set.supports()
        self.sizes = [len(labels) for labels in self.labels]
        positions = [{value: pos for pos, value in enumerate(labels)} for labels in self.labels]
        self.matrix = np.array([[positions[slot][entries[slot]] for slot in range(self.m)]
                                for entries in index_set.tuples], dtype=np.intp).reshape(self.size, self.m)

    def capacities(self, n):
        return [min(n, size) for size in self.sizes]

    def covered(self, masks, skip=None):
        """
        Boolean vector of tuples whose slots all lie in the chosen masks (slot `skip` ignored).
        """
        inside = np.ones(self.size, dtype=bool)
        for slot, mask in enumerate(masks):
            if slot != skip:
                inside &= mask[self.matrix[:, slot]]
        return inside


def _check_n_(n):
    if int(n) != n or n < 1:
        raise DomainViolation("n", n, "must be a positive integer")
    return int(n)


def psi_greedy(index_set, n, restarts=DEFAULT_PSI_RESTARTS, seed=0):
    """
    Lower bound for psi from seeded random starts improved by single-label swaps.
    """
    n = _check_n_(n)
    if restarts < 1:
        raise DomainViolation("restarts", restarts, "must be a positive integer")
    if len(index_set) == 0:
        return 0
    table = LabelTable(index_set)
    capacities = table.capacities(n)

    def climb(restart):
        return _hill_climb_(table, _random_start_(table, capacities, make_rng(seed, restart)))

    return max(parallel_map(climb, range(restarts)))


def _random_start_(table, capacities, rng):
    """
    Take tuples in random order while their labels fit, then fill the free capacity at random.
    """
    masks = [np.zeros(size, dtype=bool) for size in table.sizes]
    filled = [0] * table.m
    for row in rng.permutation(table.size):
        labels = table.matrix[row]
        missing = [slot for slot in range(table.m) if not masks[slot][labels[slot]]]
        if all(filled[slot] < capacities[slot] for slot in missing):
            for slot in missing:
                masks[slot][labels[slot]] = True
                filled[slot] += 1
        if filled == capacities:
            break
    for slot, mask in enumerate(masks):
        free = np.flatnonzero(~mask)
        if filled[slot] < capacities[slot]:
            mask[rng.choice(free, size=capacities[slot] - filled[slot], replace=False)] = True
    return masks


def _hill_climb_(table, masks):
    """
    Apply strictly improving swaps until none is left; returns the local optimum coverage.
    """
    while True:
        improved = False
        for slot in range(table.m):
            mask = masks[slot]
            outside = np.flatnonzero(~mask)
            if outside.size == 0:
                continue
            others = table.covered(masks, skip=slot)
            counts = np.bincount(table.matrix[others, slot], minlength=table.sizes[slot])
            inside = np.flatnonzero(mask)
            drop = inside[np.argmin(counts[inside])]
            take = outside[np.argmax(counts[outside])]
            if counts[take] > counts[drop]:
                mask[drop] = False
                mask[take] = True
                improved = True
                break
        if not improved:
            return int(table.covered(masks).sum())


class PsiSearch:
    """
    Depth-first branch and bound over the slot labels.

    Each node fixes one label in or out. The bound is the smallest of the number of
    still-compatible tuples, the capacity-limited best label counts of every slot and
    the product of the slot capacities. Exclusions that would leave a slot unable to
    reach min(n, |support|) labels are skipped.
    """

    def __init__(self, index_set, n, budget=DEFAULT_PSI_BUDGET):
        self.index_set = index_set
        self.n = _check_n_(n)
        if budget < 1:
            raise DomainViolation("budget", budget, "must be a positive integer")
        self.budget = budget
        self.table = LabelTable(index_set)
        self.capacities = self.table.capacities(self.n)
        self.nodes = 0
        self.best = 0

    def solve(self):
        if self.table.size == 0:
            return 0
        if self.capacities == self.table.sizes:
            return self.table.size
        self.best = psi_greedy(self.index_set, self.n, restarts=WARM_START_RESTARTS, seed=0)
        states = [np.zeros(size, dtype=np.int8) for size in self.table.sizes]
        chosen = [0] * self.table.m
        try:
            self._branch_(states, chosen)
        except SearchBudgetExhausted:
            log.info("n=%d budget %d exhausted, incumbent %d" % (self.n, self.budget, self.best))
            raise
        log.debug("n=%d solved with %d nodes, psi=%d" % (self.n, self.nodes, self.best))
        return self.best

    def _branch_(self, states, chosen):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExhausted(self.n, self.best, self.budget)
        table = self.table

        allowed = []
        compatible = np.ones(table.size, dtype=bool)
        covered = np.ones(table.size, dtype=bool)
        for slot in range(table.m):
            state = states[slot]
            open_slot = chosen[slot] < self.capacities[slot]
            mask = (state == 1) | ((state == 0) & open_slot)
            allowed.append(mask)
            column = table.matrix[:, slot]
            compatible &= mask[column]
            covered &= state[column] == 1

        value = int(covered.sum())
        if value > self.best:
            self.best = value

        bound = int(compatible.sum())
        product = 1
        pick = None
        pick_count = 0
        for slot in range(table.m):
            state = states[slot]
            counts = np.bincount(table.matrix[compatible, slot], minlength=table.sizes[slot])
            free = np.flatnonzero((state == 0) & allowed[slot])
            remaining = self.capacities[slot] - chosen[slot]
            top = int(np.sort(counts[free])[::-1][:remaining].sum()) if remaining > 0 else 0
            bound = min(bound, int(counts[state == 1].sum()) + top)
            product *= chosen[slot] + min(remaining, free.size)
            if free.size:
                position = free[np.argmax(counts[free])]
                if counts[position] > pick_count:
                    pick = (slot, position)
                    pick_count = int(counts[position])
        bound = min(bound, product)
        if bound <= self.best or pick is None:
            return

        slot, position = pick
        states[slot][position] = 1
        chosen[slot] += 1
        self._branch_(states, chosen)
        chosen[slot] -= 1

        undecided = int((states[slot] == 0).sum())
        if undecided + chosen[slot] >= self.capacities[slot]:
            states[slot][position] = -1
            self._branch_(states, chosen)
        states[slot][position] = 0


def psi_exact(index_set, n, budget=DEFAULT_PSI_BUDGET):
    """
    Exact psi_Lambda(n); raises SearchBudgetExhausted (with the incumbent) past `budget` nodes.
    """
    return PsiSearch(index_set, n, budget).solve()


def psi_bruteforce(index_set, n):
    """
    Exhaustive psi over every choice of min(n, |support_t|) labels per slot. Small inputs only.
    """
    n = _check_n_(n)
    if len(index_set) == 0:
        return 0
    supports = index_set.supports()
    choices = [list(itertools.combinations(support, min(n, len(support)))) for support in supports]
    best = 0
    for selection in itertools.product(*choices):
        sets = [set(chosen) for chosen in selection]
        count = sum(1 for entries in index_set.tuples
                    if all(entry in allowed for entry, allowed in zip(entries, sets)))
        best = max(best, count)
    return best
