"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Lower-bound estimates of sup norms on the polytorus, with witnesses."""

import math

from dataclasses import dataclass, field, replace
from typing import Dict

import numpy as np

from bhlab.bhpoly.polynomial import evaluate
from bhlab.bhutils.utils import Log
from bhlab.bhutils.utils.configuration import conf_value
from bhlab.bhutils.utils.constants import (DEFAULT_GRID_MAX_DIM, DEFAULT_GRID_RESOLUTION, DEFAULT_MAX_ITERATIONS,
                                          DEFAULT_RESTARTS, DEFAULT_SEED, DEFAULT_STEP_SIZE, DEFAULT_TOLERANCE,
                                          GRID_CHUNK)
from bhlab.bhutils.utils.exceptions import DomainViolation
from bhlab.bhutils.utils.utils import make_rng, parallel_map

TWO_PI = 2.0 * math.pi
ARMIJO = 1e-4
MIN_STEP = 1e-12

log = Log(__name__, 'supnorm')


@dataclass(frozen=True)
class OptimizerSettings:
    restarts: int = DEFAULT_RESTARTS
    max_iterations: int = DEFAULT_MAX_ITERATIONS
    step_size: float = DEFAULT_STEP_SIZE
    tolerance: float = DEFAULT_TOLERANCE
    grid_resolution: int = DEFAULT_GRID_RESOLUTION
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if int(self.restarts) != self.restarts or self.restarts < 1:
            raise DomainViolation("restarts", self.restarts, "must be a positive integer")
        if self.max_iterations < 1:
            raise DomainViolation("max_iterations", self.max_iterations, "must be positive")
        if not self.step_size > 0:
            raise DomainViolation("step_size", self.step_size, "must be positive")
        if not self.tolerance > 0:
            raise DomainViolation("tolerance", self.tolerance, "must be positive")
        if self.grid_resolution < 0:
            raise DomainViolation("grid_resolution", self.grid_resolution, "must be nonnegative")

    @classmethod
    def from_config(cls, path=None, **overrides):
        """
        Settings from the `optimizer` section of the configuration file; explicit
        keyword arguments that are not None win.
        """
        defaults = cls()
        values = {name: conf_value("optimizer", name, getattr(defaults, name), path)
                  for name in ("restarts", "max_iterations", "step_size", "tolerance", "grid_resolution")}
        values["seed"] = defaults.seed
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def with_seed(self, seed):
        return replace(self, seed=seed)


@dataclass
class NormEstimate:
    value: float
    witness: Dict = field(default_factory=dict)
    converged: bool = True
    evaluations: int = 0

    def to_dict(self):
        return {
            "value": self.value,
            "witness": {str(key): phase for key, phase in self.witness.items()},
            "converged": self.converged,
            "evaluations": self.evaluations,
        }


class _TorusObjective:
    """
    |P(e^{i theta})|^2 and its analytic gradient over the phases of the support variables.
    """

    def __init__(self, P):
        self.exponents = P.exponents.astype(float)
        self.coefficients = P.coefficients
        self.evaluations = 0

    def value(self, theta):
        self.evaluations += 1
        return abs(np.exp(1j * (self.exponents @ theta)) @ self.coefficients) ** 2

    def value_and_gradient(self, theta):
        self.evaluations += 1
        terms = self.coefficients * np.exp(1j * (self.exponents @ theta))
        total = terms.sum()
        gradient = 2.0 * np.real(np.conj(total) * ((1j * terms) @ self.exponents))
        return abs(total) ** 2, gradient


def _ascend_(objective, theta, settings):
    """
    Normalized-gradient ascent with backtracking. Returns (theta, value, converged).
    """
    value, gradient = objective.value_and_gradient(theta)
    for _ in range(settings.max_iterations):
        norm = float(np.linalg.norm(gradient))
        if norm == 0.0 or value == 0.0:
            return theta, value, True
        direction = gradient / norm
        step = settings.step_size
        while step >= MIN_STEP:
            candidate = theta + step * direction
            candidate_value = objective.value(candidate)
            if candidate_value >= value + ARMIJO * step * norm:
                break
            step *= 0.5
        else:
            return theta, value, True
        improvement = (candidate_value - value) / value
        theta = candidate
        value, gradient = objective.value_and_gradient(theta)
        if improvement < settings.tolerance:
            return theta, value, True
    return theta, value, False


def _grid_best_(P, resolution):
    """
    Best point of the phase grid with the first phase held at 0.
    """
    d = len(P.variable_support)
    if d == 1:
        return np.zeros(1), 1
    shape = (resolution,) * (d - 1)
    total = resolution ** (d - 1)
    best_value, best_theta = -1.0, np.zeros(d)
    for start in range(0, total, GRID_CHUNK):
        flat = np.arange(start, min(start + GRID_CHUNK, total))
        digits = np.array(np.unravel_index(flat, shape), dtype=float).T.reshape(len(flat), d - 1)
        phases = np.hstack([np.zeros((len(flat), 1)), TWO_PI * digits / resolution])
        values = np.abs(P.evaluate_phases(phases)) ** 2
        position = int(np.argmax(values))
        if values[position] > best_value:
            best_value, best_theta = float(values[position]), phases[position]
    return best_theta, total


def sup_norm_poly(P, settings=None):
    """
    Lower bound for the sup of |P| over the polytorus of its variable support.
    """
    settings = settings or OptimizerSettings()
    if len(P) == 0:
        return NormEstimate(0.0, {}, True, 0)
    d = len(P.variable_support)
    evaluations = 0
    starts = []
    if settings.grid_resolution > 0 and d <= DEFAULT_GRID_MAX_DIM:
        theta, count = _grid_best_(P, settings.grid_resolution)
        evaluations += count
        starts.append(theta)
    for restart in range(settings.restarts):
        starts.append(make_rng(settings.seed, restart).uniform(0.0, TWO_PI, size=d))

    def climb(theta):
        objective = _TorusObjective(P)
        result = _ascend_(objective, np.array(theta, dtype=float), settings)
        return result + (objective.evaluations,)

    best = None
    for theta, value, converged, count in parallel_map(climb, starts):
        evaluations += count
        if best is None or value > best[1]:
            best = (theta, value, converged)
    theta, _, converged = best
    if not converged:
        log.debug("ascent hit max_iterations=%d" % settings.max_iterations)
    witness = {var: float(phase) for var, phase in zip(P.variable_support, np.mod(theta, TWO_PI))}
    value = abs(evaluate(P, {var: complex(math.cos(phase), math.sin(phase)) for var, phase in witness.items()}))
    return NormEstimate(float(value), witness, converged, evaluations)


def _alternate_(T, vectors, settings):
    """
    Round-robin exact maximization over one slot at a time.
    """
    value = abs(T.evaluate_slots(vectors))
    evaluations = 1
    for _ in range(settings.max_iterations):
        previous = value
        for slot in range(T.m):
            partial = T.values.copy()
            for other in range(T.m):
                if other != slot:
                    partial *= vectors[other][T.index[:, other]]
            linear = np.zeros(len(T.slot_labels[slot]), dtype=complex)
            np.add.at(linear, T.index[:, slot], partial)
            moduli = np.abs(linear)
            safe = np.where(moduli > 0, moduli, 1.0)
            vectors[slot] = np.where(moduli > 0, np.conj(linear) / safe, vectors[slot])
            value = float(moduli.sum())
            evaluations += 1
        if value - previous <= settings.tolerance * max(previous, np.finfo(float).tiny):
            return vectors, value, True, evaluations
    return vectors, value, False, evaluations


def sup_norm_form(T, settings=None):
    """
    Lower bound for the norm of T on the product of unit balls, by alternating phase maximization.
    """
    settings = settings or OptimizerSettings()
    if len(T) == 0:
        return NormEstimate(0.0, {}, True, 0)

    def run(restart):
        rng = make_rng(settings.seed, restart)
        vectors = [np.exp(1j * rng.uniform(0.0, TWO_PI, size=len(labels))) for labels in T.slot_labels]
        return _alternate_(T, vectors, settings)

    best = None
    evaluations = 0
    for vectors, value, converged, count in parallel_map(run, range(settings.restarts)):
        evaluations += count
        if best is None or value > best[1]:
            best = (vectors, value, converged)
    vectors, _, converged = best
    phases = [np.mod(np.angle(vector), TWO_PI) for vector in vectors]
    witness = {(slot, var): float(phase)
               for slot, labels in enumerate(T.slot_labels) for var, phase in zip(labels, phases[slot])}
    value = abs(T.evaluate_slots([np.exp(1j * phase) for phase in phases]))
    return NormEstimate(float(value), witness, converged, evaluations)
