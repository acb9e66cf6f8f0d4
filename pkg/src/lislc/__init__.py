"""Exact LIS distributions, log-concavity certificates, and Tracy-Widom numerics."""

from .counting import CountSequence, ell_seq, gen_poly, inv_seq, skew_merged_seq
from .logconcave import certify_infinite_lc, is_log_concave, q_log_convex_step, real_rooted
from .partitions import Family, Partition, conjugate, num_syt, partitions_of
from .rsk import StandardTableau, lis_length, rsk, rsk_inverse

__version__ = "0.1.0"

__all__ = [
    "CountSequence", "Family", "Partition", "StandardTableau",
    "certify_infinite_lc", "conjugate", "ell_seq", "gen_poly", "inv_seq",
    "is_log_concave", "lis_length", "num_syt", "partitions_of",
    "q_log_convex_step", "real_rooted", "rsk", "rsk_inverse", "skew_merged_seq",
]
