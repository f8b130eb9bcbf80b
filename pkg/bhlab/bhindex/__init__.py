from .indexset import (IndexSet, ExponentVector, canonicalize, tuple_to_exponent, exponent_to_tuple,
                       weight, multi_factorial, check_tuple)
from .families import gen_full, gen_delta_M, gen_prime_diagonal, gen_arith_diagonal, gen_triangle
from .idxfile import parse_index_set, serialize_index_set, read_index_set, write_index_set
