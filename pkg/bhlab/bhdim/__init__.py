from .psi import psi_exact, psi_greedy, psi_bruteforce, PsiSearch
from .dimension import (PsiProfile, DimEstimate, psi_profile, fit_dimension, estimate_dim, default_n_values,
                        parse_profile)
