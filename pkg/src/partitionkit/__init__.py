"""Exact integer-partition statistics, identity checks and Ferrers constructions."""

__version__ = "0.1.0"

from .counting import partition_number, q_count, s_sum, v_count
from .ferrers import FerrersDiagram, add_packet, count_new_partitions, merge_sites, render
from .partitions import (
    EnumerationCapError,
    Partition,
    count_partitions_brute,
    enumerate_partitions,
    iter_partitions,
    q_count_brute,
    s_sum_brute,
    v_count_brute,
)
from .series import TruncatedSeries, euler_product, q_generating_series
from .theorems import (
    CongruenceClaim,
    VerificationReport,
    builtin_claims,
    scan_for_C,
    verify_congruence,
    verify_elder,
    verify_stanley,
    verify_theorem1,
    verify_theorem2,
)

__all__ = [
    "CongruenceClaim",
    "EnumerationCapError",
    "FerrersDiagram",
    "Partition",
    "TruncatedSeries",
    "VerificationReport",
    "add_packet",
    "builtin_claims",
    "count_new_partitions",
    "count_partitions_brute",
    "enumerate_partitions",
    "euler_product",
    "iter_partitions",
    "merge_sites",
    "partition_number",
    "q_count",
    "q_count_brute",
    "q_generating_series",
    "render",
    "s_sum",
    "s_sum_brute",
    "scan_for_C",
    "v_count",
    "v_count_brute",
    "verify_congruence",
    "verify_elder",
    "verify_stanley",
    "verify_theorem1",
    "verify_theorem2",
]
