from .bounds import (ExponentData, BoundValue, ComparisonBounds, exponents, theorem_bound, comparison_bounds,
                     chain_constant)
from .norms import StepCheck, mixed_norm_lhs, bayart_lhs, holder_chain_check, coefficient_step_check
from .verifier import (BayartEstimate, TrialRecord, StepSummary, VerificationReport, estimate_bayart_constant,
                       verify_theorem)
