"""Evaluation statistics over ingested human ratings."""

from .analysis import (
    AnovaResult,
    CorrelationResult,
    PairwiseComparison,
    RatingRecord,
    SummaryStats,
    TukeyResult,
    correlation_by_method,
    correlation_from_r,
    cronbach_alpha,
    evaluation_report,
    fisher_interval,
    grouped_values,
    load_ratings,
    match_scores,
    method_summary,
    one_way_anova,
    pearson,
    rating_matrix,
    tukey_hsd,
)
from .special import (
    betainc_regularized,
    f_sf,
    normal_cdf,
    studentized_range_cdf,
    studentized_range_crit,
    t_sf_two_sided,
)

__all__ = [
    "AnovaResult",
    "CorrelationResult",
    "PairwiseComparison",
    "RatingRecord",
    "SummaryStats",
    "TukeyResult",
    "betainc_regularized",
    "correlation_by_method",
    "correlation_from_r",
    "cronbach_alpha",
    "evaluation_report",
    "f_sf",
    "fisher_interval",
    "grouped_values",
    "load_ratings",
    "match_scores",
    "method_summary",
    "normal_cdf",
    "one_way_anova",
    "pearson",
    "rating_matrix",
    "studentized_range_cdf",
    "studentized_range_crit",
    "t_sf_two_sided",
    "tukey_hsd",
]
