"""Rating ingestion and the evaluation statistics: ANOVA, Tukey HSD,
Pearson correlations with Fisher confidence intervals, Cronbach's alpha.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from ..errors import RatingsError
from .special import (f_sf, studentized_range_crit, t_sf_two_sided)

MEASURES = ("relevance", "distance")

# Normal upper 2.5% point, fixed for the 95% Fisher interval.
_Z_95 = 1.959964


@dataclass(frozen=True)
class RatingRecord:
    """One human judgment of one match by one rater."""

    match_id: str
    scenario_id: str
    method: str
    rater_id: str
    measure: str
    value: float


@dataclass(frozen=True)
class AnovaResult:
    F: float
    df_between: int
    df_within: int
    p: float


@dataclass(frozen=True)
class PairwiseComparison:
    mean_diff: float
    q_stat: float
    significant: bool


@dataclass(frozen=True)
class TukeyResult:
    pairs: dict[tuple[int, int], PairwiseComparison]
    q_crit: float
    alpha: float
    df_within: int
    kramer: bool


@dataclass(frozen=True)
class CorrelationResult:
    r: float
    ci_low: float
    ci_high: float
    p: float
    n: int


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    sd: float
    n: int


def load_ratings(path: str | Path) -> list[RatingRecord]:
    """Read the ratings CSV, enforcing the record invariants.

    Header must be ``match_id,scenario_id,method,rater_id,measure,value``;
    values lie in [1, 5] and (match_id, rater_id, measure) is unique.
    """
    path = Path(path)
    expected = ["match_id", "scenario_id", "method", "rater_id", "measure", "value"]
    records: list[RatingRecord] = []
    seen: set[tuple[str, str, str]] = set()
    with path.open(encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != expected:
            raise RatingsError(f"{path}: header must be {','.join(expected)}")
        for row_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 6:
                raise RatingsError(f"{path}: line {row_no}: expected 6 fields, got {len(row)}")
            match_id, scenario_id, method, rater_id, measure, raw_value = row
            if measure not in MEASURES:
                raise RatingsError(f"{path}: line {row_no}: unknown measure {measure!r}")
            try:
                value = float(raw_value)
            except ValueError as exc:
                raise RatingsError(f"{path}: line {row_no}: bad value {raw_value!r}") from exc
            if not 1.0 <= value <= 5.0:
                raise RatingsError(f"{path}: line {row_no}: value {value} outside [1, 5]")
            key = (match_id, rater_id, measure)
            if key in seen:
                raise RatingsError(f"{path}: line {row_no}: duplicate rating {key}")
            seen.add(key)
            records.append(RatingRecord(match_id=match_id, scenario_id=scenario_id,
                                        method=method, rater_id=rater_id,
                                        measure=measure, value=value))
    return records


def _mean(values: Sequence[float]) -> float:
    return sum(values) / len(values)


def _sample_var(values: Sequence[float]) -> float:
    m = _mean(values)
    return sum((v - m) ** 2 for v in values) / (len(values) - 1)


def _check_groups(groups: Sequence[Sequence[float]]) -> None:
    if len(groups) < 2:
        raise ValueError("need at least 2 groups")
    for i, group in enumerate(groups):
        if len(group) < 2:
            raise ValueError(f"group {i} has fewer than 2 values")


def one_way_anova(groups: Sequence[Sequence[float]]) -> AnovaResult:
    """Standard one-way ANOVA from group sums of squares.

    When both between- and within-group variation vanish (all values equal),
    F is defined as 0 with p = 1.
    """
    _check_groups(groups)
    k = len(groups)
    n_total = sum(len(g) for g in groups)
    grand = sum(sum(g) for g in groups) / n_total
    ss_between = sum(len(g) * (_mean(g) - grand) ** 2 for g in groups)
    ss_within = sum(sum((v - _mean(g)) ** 2 for v in g) for g in groups)
    df_between = k - 1
    df_within = n_total - k
    if ss_within == 0.0:
        if ss_between == 0.0:
            return AnovaResult(F=0.0, df_between=df_between, df_within=df_within, p=1.0)
        return AnovaResult(F=math.inf, df_between=df_between, df_within=df_within, p=0.0)
    f_stat = (ss_between / df_between) / (ss_within / df_within)
    return AnovaResult(F=f_stat, df_between=df_between, df_within=df_within,
                       p=f_sf(f_stat, df_between, df_within))


def tukey_hsd(groups: Sequence[Sequence[float]], alpha: float = 0.05) -> TukeyResult:
    """Tukey HSD pairwise comparisons after a one-way design.

    With unequal group sizes the Tukey-Kramer denominator
    ``sqrt(MS_within / 2 * (1/n_i + 1/n_j))`` is used and flagged via
    ``kramer``; the classic equal-n statistic is recovered otherwise.
    """
    _check_groups(groups)
    k = len(groups)
    n_total = sum(len(g) for g in groups)
    df_within = n_total - k
    ms_within = sum(sum((v - _mean(g)) ** 2 for v in g) for g in groups) / df_within
    sizes = [len(g) for g in groups]
    kramer = len(set(sizes)) > 1
    q_crit = studentized_range_crit(alpha, k, df_within)
    means = [_mean(g) for g in groups]
    pairs: dict[tuple[int, int], PairwiseComparison] = {}
    for i in range(k):
        for j in range(i + 1, k):
            denom = math.sqrt(ms_within / 2.0 * (1.0 / sizes[i] + 1.0 / sizes[j]))
            diff = means[i] - means[j]
            if denom == 0.0:
                q_stat = 0.0 if diff == 0.0 else math.inf
            else:
                q_stat = abs(diff) / denom
            pairs[(i, j)] = PairwiseComparison(mean_diff=diff, q_stat=q_stat,
                                               significant=q_stat > q_crit)
    return TukeyResult(pairs=pairs, q_crit=q_crit, alpha=alpha,
                       df_within=df_within, kramer=kramer)


def fisher_interval(r: float, n: int) -> tuple[float, float]:
    """95% confidence interval for a correlation via the Fisher transform."""
    if n < 4:
        raise ValueError("need n >= 4 for a Fisher interval")
    if abs(r) >= 1.0:
        return (r, r)
    z = math.atanh(r)
    half_width = _Z_95 / math.sqrt(n - 3)
    return (math.tanh(z - half_width), math.tanh(z + half_width))


def correlation_from_r(r: float, n: int) -> CorrelationResult:
    """CI and two-sided p for a reported correlation coefficient."""
    if not -1.0 <= r <= 1.0:
        raise ValueError(f"r must be in [-1, 1], got {r}")
    ci_low, ci_high = fisher_interval(r, n)
    if abs(r) >= 1.0:
        p = 0.0
    else:
        t = r * math.sqrt(n - 2) / math.sqrt(1.0 - r * r)
        p = t_sf_two_sided(t, n - 2)
    return CorrelationResult(r=r, ci_low=ci_low, ci_high=ci_high, p=p, n=n)


def pearson(x: Sequence[float], y: Sequence[float]) -> CorrelationResult:
    """Sample Pearson correlation with Fisher CI and t-based two-sided p."""
    if len(x) != len(y):
        raise ValueError("x and y must have equal length")
    n = len(x)
    if n < 4:
        raise ValueError("need n >= 4")
    mx, my = _mean(x), _mean(y)
    dx = [v - mx for v in x]
    dy = [v - my for v in y]
    sxx = sum(v * v for v in dx)
    syy = sum(v * v for v in dy)
    if sxx == 0.0 or syy == 0.0:
        raise ValueError("zero variance in x or y")
    r = sum(a * b for a, b in zip(dx, dy)) / (math.sqrt(sxx) * math.sqrt(syy))
    r = max(-1.0, min(1.0, r))
    return correlation_from_r(r, n)


def cronbach_alpha(ratings: Sequence[Sequence[float]]) -> float:
    """Cronbach's alpha over a raters x items matrix.

    ``alpha = k/(k-1) * (1 - sum(var_rater) / var_total)`` with sample
    variances taken across items; the matrix must be complete.
    """
    k = len(ratings)
    if k < 2:
        raise ValueError("need at least 2 raters")
    n_items = len(ratings[0])
    if n_items < 2:
        raise ValueError("need at least 2 items")
    if any(len(row) != n_items for row in ratings):
        raise ValueError("rating matrix is incomplete")
    rater_vars = sum(_sample_var(row) for row in ratings)
    totals = [sum(row[i] for row in ratings) for i in range(n_items)]
    total_var = _sample_var(totals)
    if total_var == 0.0:
        raise ValueError("total score variance is zero")
    return k / (k - 1) * (1.0 - rater_vars / total_var)


def match_scores(records: Sequence[RatingRecord], measure: str) -> dict[str, list[tuple[str, float]]]:
    """Per-method (match_id, score) lists, rater-averaged, ordered by match id.

    Distance scores require exactly two ratings per match (their mean is the
    score); relevance takes the mean of however many ratings exist
    (typically a single one).
    """
    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}")
    by_match: dict[str, list[RatingRecord]] = {}
    for record in records:
        if record.measure == measure:
            by_match.setdefault(record.match_id, []).append(record)
    out: dict[str, list[tuple[str, float]]] = {}
    for match_id in sorted(by_match):
        group = by_match[match_id]
        methods = {r.method for r in group}
        if len(methods) > 1:
            raise RatingsError(f"match {match_id!r} is attributed to several methods")
        if measure == "distance" and len(group) != 2:
            raise RatingsError(
                f"match {match_id!r} has {len(group)} distance ratings, expected 2")
        score = _mean([r.value for r in group])
        out.setdefault(group[0].method, []).append((match_id, score))
    return out


def method_summary(records: Sequence[RatingRecord]) -> dict[str, dict[str, SummaryStats]]:
    """Per-method mean/sd/n for each measure present in the records."""
    summary: dict[str, dict[str, SummaryStats]] = {}
    for measure in MEASURES:
        try:
            scores = match_scores(records, measure)
        except RatingsError:
            raise
        for method, pairs in scores.items():
            values = [v for _, v in pairs]
            stats = SummaryStats(mean=_mean(values),
                                 sd=math.sqrt(_sample_var(values)) if len(values) > 1 else 0.0,
                                 n=len(values))
            summary.setdefault(method, {})[measure] = stats
    return summary


def rating_matrix(records: Sequence[RatingRecord], measure: str) -> list[list[float]] | None:
    """Raters x items matrix for a measure, or None if raters do not form one."""
    by_rater: dict[str, dict[str, float]] = {}
    for record in records:
        if record.measure == measure:
            by_rater.setdefault(record.rater_id, {})[record.match_id] = record.value
    if len(by_rater) < 2:
        return None
    raters = sorted(by_rater)
    items = sorted(by_rater[raters[0]])
    if len(items) < 2:
        return None
    for rater in raters:
        if sorted(by_rater[rater]) != items:
            return None
    return [[by_rater[rater][item] for item in items] for rater in raters]


def correlation_by_method(records: Sequence[RatingRecord]) -> dict[str, CorrelationResult]:
    """Relevance/distance correlation per method and overall (key ``all``)."""
    relevance = {m: dict(pairs) for m, pairs in match_scores(records, "relevance").items()}
    distance = {m: dict(pairs) for m, pairs in match_scores(records, "distance").items()}
    results: dict[str, CorrelationResult] = {}
    all_x: list[float] = []
    all_y: list[float] = []
    for method in sorted(set(relevance) & set(distance)):
        shared = sorted(set(relevance[method]) & set(distance[method]))
        if len(shared) < 4:
            continue
        x = [relevance[method][m] for m in shared]
        y = [distance[method][m] for m in shared]
        results[method] = pearson(x, y)
        all_x.extend(x)
        all_y.extend(y)
    if len(all_x) >= 4:
        results["all"] = pearson(all_x, all_y)
    return results


def grouped_values(scores: Mapping[str, list[tuple[str, float]]],
                   methods: Sequence[str] | None = None) -> tuple[list[str], list[list[float]]]:
    """Stable (methods, groups) pairing for ANOVA/Tukey over match scores."""
    names = list(methods) if methods is not None else sorted(scores)
    groups = [[v for _, v in scores[name]] for name in names]
    return names, groups


def evaluation_report(records: Sequence[RatingRecord], alpha: float = 0.05) -> dict:
    """The full analysis in one structured, JSON-ready dictionary.

    Per-method means, one-way ANOVA and Tukey HSD for each measure, the
    relevance/distance correlations overall and per method, and inter-rater
    alpha where a complete raters x items matrix exists.
    """
    report: dict = {"methods": {}, "measures": {}}
    summary = method_summary(records)
    for method in sorted(summary):
        report["methods"][method] = {
            measure: {"mean": stats.mean, "sd": stats.sd, "n": stats.n}
            for measure, stats in summary[method].items()
        }
    for measure in MEASURES:
        scores = match_scores(records, measure)
        if len(scores) < 2:
            continue
        names, groups = grouped_values(scores)
        anova = one_way_anova(groups)
        tukey = tukey_hsd(groups, alpha=alpha)
        matrix = rating_matrix(records, measure)
        report["measures"][measure] = {
            "anova": {"F": anova.F, "df_between": anova.df_between,
                      "df_within": anova.df_within, "p": anova.p},
            "tukey": {
                "q_crit": tukey.q_crit,
                "alpha": tukey.alpha,
                "kramer": tukey.kramer,
                "pairs": [
                    {"a": names[i], "b": names[j],
                     "mean_diff": cmp.mean_diff, "q_stat": cmp.q_stat,
                     "significant": cmp.significant}
                    for (i, j), cmp in sorted(tukey.pairs.items())
                ],
            },
            "cronbach_alpha": cronbach_alpha(matrix) if matrix is not None else None,
        }
    correlations = correlation_by_method(records)
    report["correlations"] = {
        name: {"r": c.r, "ci_low": c.ci_low, "ci_high": c.ci_high,
               "p": c.p, "n": c.n}
        for name, c in sorted(correlations.items())
    }
    return report
