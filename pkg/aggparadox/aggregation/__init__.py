from aggparadox.aggregation.paradox import (
    brute_force_cr,
    check_paradox,
    irrational_voters,
    is_collectively_rational,
    is_rational,
)
from aggparadox.aggregation.profiles import format_profile, parse_profile, read_profile
from aggparadox.aggregation.rules import MAJORITY, AggregationRule, MajorityRule, majority

__all__ = [
    "AggregationRule",
    "MAJORITY",
    "MajorityRule",
    "brute_force_cr",
    "check_paradox",
    "format_profile",
    "irrational_voters",
    "is_collectively_rational",
    "is_rational",
    "majority",
    "parse_profile",
    "read_profile",
]
