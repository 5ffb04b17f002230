"""Upper bounds, constructions and exact values for binary codes with few distances."""

__version__ = "0.1.0"

from .bounds import (BOUND_ORDER, BestBounds, BoundReport, best_bounds, bound_barg_musin,
                     bound_nozaki_shinohara, bound_theorem1, bound_theorem2, bound_two_distance)
from .combinatorics import (SingularMatrixError, binomial, partition_count, rank_exact,
                            solve_linear_exact)
from .constructions import construct_constant_weight, construct_golay_blocks
from .core import (Code, CodeParseError, DistanceSet, EmptyDistanceSetError, InvalidInputError,
                   ResourceLimitError, Word, distance_set_of, hamming_distance, parse_code,
                   serialize_code, weight)
from .krawtchouk import (KrawtchoukExpansion, annihilator_eval, expand_in_krawtchouk,
                         krawtchouk_eval)
from .polymethod import (MultivariatePolynomial, build_P, eval_P, evaluation_matrix,
                         even_coefficient_formula, symmetrized_even_span_check,
                         verify_linear_independence)
from .search import SearchResult, max_code, verify_witness
