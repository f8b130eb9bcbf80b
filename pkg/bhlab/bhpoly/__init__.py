from .polynomial import SparsePolynomial, evaluate, random_polynomial, coeff_norm, polynomial_from_coefficients
from .multilinear import MultilinearForm, polarize_eval, symmetric_tensor, full_symmetric_tensor, evaluate_form
from .supnorm import OptimizerSettings, NormEstimate, sup_norm_poly, sup_norm_form
from .polyfile import parse_poly, serialize_poly, read_poly, write_poly
