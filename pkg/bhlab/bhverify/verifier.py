"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Empirical Bayart constants and the end-to-end check of the proof chain on random polynomials."""

import math

from collections import OrderedDict
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

from bhlab.bhpoly.multilinear import symmetric_tensor
from bhlab.bhpoly.polynomial import coeff_norm, random_polynomial
from bhlab.bhpoly.supnorm import OptimizerSettings, sup_norm_form, sup_norm_poly
from bhlab.bhutils.utils import Log
from bhlab.bhutils.utils.constants import DEFAULT_TRIALS, HARD_SLACK, SOFT_SLACK
from bhlab.bhutils.utils.exceptions import BHLabException, DomainViolation, TrialFailed
from bhlab.bhutils.utils.parameterargs import Distribution, to_enum
from bhlab.bhutils.utils.utils import derive_seed, parallel_map
from bhlab.bhverify.bounds import LOG_KHINCHINE, exponents, theorem_bound
from bhlab.bhverify.norms import bayart_lhs, coefficient_step_check, holder_chain_check, mixed_norm_lhs

HARD_STEPS = ("holder", "coefficient")
SOFT_STEPS = ("khinchine", "polarization", "max_modulus", "theorem")
STEP_ORDER = ("khinchine", "polarization", "max_modulus", "holder", "coefficient", "theorem")

log = Log(__name__, 'verifier')


def _ratio_(lhs, rhs):
    if rhs == 0.0:
        return 0.0 if lhs == 0.0 else math.inf
    return lhs / rhs


def _draw_(index_set, dist, seed, trial):
    trial_seed = derive_seed(seed, trial)
    P = random_polynomial(index_set, dist, trial_seed)
    return trial_seed, P, symmetric_tensor(P, index_set)


def _mixed_norms_(T):
    return [mixed_norm_lhs(T, k) for k in range(1, T.m + 1)]


@dataclass
class BayartEstimate:
    c_hat: Optional[float]
    ratios: List[float]
    skipped: int = 0
    norm_ratios: Optional[List[float]] = None

    def to_dict(self):
        return asdict(self)


def estimate_bayart_constant(index_set, d, trials=DEFAULT_TRIALS, dist=Distribution.STEINHAUS, seed=0,
                             settings=None):
    """
    Largest observed ratio of the Bayart aggregation to the sum of the mixed norms.

    With optimizer settings the ratio against m (2/sqrt(pi))^(m-1) ||T|| is reported as well.
    """
    if trials < 1:
        raise DomainViolation("trials", trials, "must be a positive integer")
    if not d > 0:
        raise DomainViolation("d", d, "must be positive")
    dist = to_enum(Distribution, dist)
    m = index_set.m

    def run(trial):
        trial_seed, P, T = _draw_(index_set, dist, seed, trial)
        denominator = sum(_mixed_norms_(T))
        if denominator == 0.0:
            return None, None
        lhs = bayart_lhs(T, index_set, d)
        norm_ratio = None
        if settings is not None:
            sup_form = sup_norm_form(T, settings.with_seed(trial_seed)).value
            norm_ratio = _ratio_(lhs, m * math.exp((m - 1) * LOG_KHINCHINE) * sup_form)
        return lhs / denominator, norm_ratio

    results = parallel_map(run, range(trials))
    ratios = [ratio for ratio, _ in results if ratio is not None]
    skipped = trials - len(ratios)
    if skipped:
        log.info("%d degenerate trials skipped" % skipped)
    norm_ratios = [value for ratio, value in results if ratio is not None] if settings is not None else None
    return BayartEstimate(max(ratios) if ratios else None, ratios, skipped, norm_ratios)


@dataclass
class TrialRecord:
    trial: int
    seed: int
    quotient: float
    sup_poly: float
    sup_form: float
    bayart_ratio: Optional[float]
    margins: Dict[str, float] = field(default_factory=dict)

    def to_dict(self):
        return OrderedDict([
            ("trial", self.trial),
            ("seed", self.seed),
            ("quotient", self.quotient),
            ("sup_poly", self.sup_poly),
            ("sup_form", self.sup_form),
            ("bayart_ratio", self.bayart_ratio),
            ("margins", OrderedDict((name, self.margins[name]) for name in STEP_ORDER if name in self.margins)),
        ])


@dataclass
class StepSummary:
    max_margin: float
    passed: bool
    kind: str

    def to_dict(self):
        return OrderedDict([("max_margin", self.max_margin), ("pass", self.passed), ("kind", self.kind)])


@dataclass
class VerificationReport:
    lambda_label: Optional[str]
    m: int
    d: float
    trial_count: int
    dist: str
    seed: int
    settings: Dict
    c_hat: float
    max_quotient: float
    theorem_bound: float
    theorem_margin: float
    steps: Dict[str, StepSummary]
    trials: List[TrialRecord]
    skipped: int = 0

    @property
    def hard_failures(self):
        return [name for name in HARD_STEPS if not self.steps[name].passed]

    @property
    def soft_failures(self):
        return [name for name in SOFT_STEPS if not self.steps[name].passed]

    @property
    def passed(self):
        return not self.hard_failures

    def to_dict(self):
        return OrderedDict([
            ("lambda_label", self.lambda_label),
            ("m", self.m),
            ("d", self.d),
            ("trial_count", self.trial_count),
            ("dist", self.dist),
            ("seed", self.seed),
            ("settings", self.settings),
            ("c_hat", self.c_hat),
            ("max_quotient", self.max_quotient),
            ("theorem_bound", self.theorem_bound),
            ("theorem_margin", self.theorem_margin),
            ("skipped", self.skipped),
            ("steps", OrderedDict((name, self.steps[name].to_dict()) for name in STEP_ORDER)),
            ("trials", [record.to_dict() for record in self.trials]),
        ])


def _run_trial_(index_set, d, dist, seed, trial, settings):
    m = index_set.m
    trial_seed, P, T = _draw_(index_set, dist, seed, trial)
    trial_settings = settings.with_seed(trial_seed)
    sup_poly = sup_norm_poly(P, trial_settings).value
    sup_form = sup_norm_form(T, trial_settings).value
    mixed = _mixed_norms_(T)
    denominator = sum(mixed)
    bayart_ratio = bayart_lhs(T, index_set, d) / denominator if denominator > 0 else None
    khinchine = math.exp((m - 1) * LOG_KHINCHINE)
    margins = {
        "khinchine": _ratio_(max(mixed), khinchine * sup_form),
        "polarization": _ratio_(sup_form, math.exp(m) * sup_poly),
        "max_modulus": _ratio_(coeff_norm(P, 2.0), sup_poly),
        "holder": holder_chain_check(P.coefficients, m, d).margin,
        "coefficient": coefficient_step_check(P, T, index_set, d).margin,
    }
    quotient = _ratio_(coeff_norm(P, 2.0 * m / (m + 1)), sup_poly)
    return TrialRecord(trial, trial_seed, quotient, sup_poly, sup_form, bayart_ratio, margins)


def verify_theorem(index_set, d, trials=DEFAULT_TRIALS, dist=Distribution.STEINHAUS, seed=0, settings=None,
                   slack=SOFT_SLACK):
    """
    Run the proof chain on `trials` random polynomials supported on the index set.

    Steps in exact arithmetic (holder, coefficient) pass within 1e-9; steps that divide
    by an estimated sup norm pass within `slack`.
    """
    if len(index_set) == 0:
        raise DomainViolation("index set", index_set, "must be nonempty")
    if trials < 1:
        raise DomainViolation("trials", trials, "must be a positive integer")
    data = exponents(index_set.m, d)
    d = float(data.d)
    dist = to_enum(Distribution, dist)
    settings = settings or OptimizerSettings()

    def run(trial):
        try:
            return _run_trial_(index_set, d, dist, seed, trial, settings)
        except BHLabException as e:
            raise TrialFailed(trial, e)
        except (ArithmeticError, ValueError) as e:
            raise TrialFailed(trial, e)

    records = parallel_map(run, range(trials))
    ratios = [record.bayart_ratio for record in records if record.bayart_ratio is not None]
    if not ratios:
        raise DomainViolation("trials", trials, "every trial drew a zero form")
    c_hat = max(ratios)
    bound = theorem_bound(index_set.m, d, c_hat).value
    max_quotient = max(record.quotient for record in records)
    for record in records:
        record.margins["theorem"] = record.quotient / bound

    steps = OrderedDict()
    for name in STEP_ORDER:
        kind = "hard" if name in HARD_STEPS else "soft"
        allowed = HARD_SLACK if kind == "hard" else slack
        max_margin = max(record.margins[name] for record in records)
        steps[name] = StepSummary(max_margin, max_margin <= 1.0 + allowed, kind)
        if not steps[name].passed:
            failing = [record.trial for record in records if record.margins[name] > 1.0 + allowed]
            log.info("%s step (%s) margin %.6g exceeds 1 + %g in trials %s" % (name, kind, max_margin, allowed,
                                                                              failing))

    report = VerificationReport(index_set.label, index_set.m, d, trials, dist.value, seed, asdict(settings), c_hat,
                                max_quotient, bound, max_quotient / bound, steps, records,
                                skipped=trials - len(ratios))
    log.info("verified %r with %d trials: hard %s" % (index_set, trials, "pass" if report.passed else "FAIL"))
    return report
