from counting.combinatorics import (
    BigCount,
    binomial,
    compositions_count,
    evaluate_polynomial,
    gaussian_polynomial,
    is_symmetric,
    is_unimodal,
    parse_count,
    partitions_count,
    q_binomial,
    render_count,
)

__all__ = [
    "BigCount",
    "binomial",
    "compositions_count",
    "evaluate_polynomial",
    "gaussian_polynomial",
    "is_symmetric",
    "is_unimodal",
    "parse_count",
    "partitions_count",
    "q_binomial",
    "render_count",
]
