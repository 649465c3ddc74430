"""Maximum sum-rank distance codes and PMDS codes from extended Moore matrices."""
from ._caps import CapExceeded
from .bounds import BoundResult, evaluate_bounds
from .finite_field import FieldContext, make_field
from .linalg import MatrixF, is_mds_matrix, rank
from .msrd import (MsrdCode, MsrdParams, build_msrd_code, check_msrd_conditions,
                   extended_moore_matrix, is_msrd_matrix_bruteforce, min_sum_rank_distance_exhaustive)
from .pmds import PmdsCode, construct_pmds, correct_erasures, verify_pmds_bruteforce
from .seeds import SeedCode, bch_seed, hamming_seed, hermitian_seed, mds_seed, trivial_seed

__version__ = "0.1.0"

__all__ = [
    "BoundResult", "CapExceeded", "FieldContext", "MatrixF", "MsrdCode", "MsrdParams", "PmdsCode", "SeedCode",
    "bch_seed", "build_msrd_code", "check_msrd_conditions", "construct_pmds", "correct_erasures",
    "evaluate_bounds", "extended_moore_matrix", "hamming_seed", "hermitian_seed", "is_mds_matrix",
    "is_msrd_matrix_bruteforce", "make_field", "mds_seed", "min_sum_rank_distance_exhaustive", "rank",
    "trivial_seed", "verify_pmds_bruteforce",
]
