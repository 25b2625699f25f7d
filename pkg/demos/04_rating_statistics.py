"""Reproduce the evaluation statistics over a ratings file.

The shipped CSV holds synthetic ratings for 4 methods x 10 scenarios x 10
matches (relevance singly rated, distance rated by two raters and averaged).
The analysis is per-method means, one-way ANOVA with Tukey HSD post-hocs,
relevance/distance correlations with Fisher 95% intervals, and inter-rater
alpha where a complete rater matrix exists.

Run:  python demos/04_rating_statistics.py
"""

import analogon
from analogon.stats import correlation_from_r, evaluation_report, load_ratings

records = load_ratings(analogon.data_path("ratings_synthetic.csv"))
report = evaluation_report(records)

print("Per-method means:")
for method, measures in report["methods"].items():
    parts = ", ".join(f"{measure} {stats['mean']:.2f} (sd {stats['sd']:.2f})"
                      for measure, stats in measures.items())
    print(f"  {method:16s} {parts}")

for measure, block in report["measures"].items():
    anova = block["anova"]
    print(f"\n{measure}: F({anova['df_between']},{anova['df_within']}) "
          f"= {anova['F']:.1f}, p = {anova['p']:.3g}")
    significant = [f"{p['a']} vs {p['b']}" for p in block["tukey"]["pairs"]
                   if p["significant"]]
    print(f"  Tukey-significant pairs: {significant or 'none'}")
    if block["cronbach_alpha"] is not None:
        print(f"  inter-rater alpha: {block['cronbach_alpha']:.2f}")

print("\nRelevance/distance correlations:")
for name, corr in report["correlations"].items():
    print(f"  {name:16s} r = {corr['r']:+.2f} "
          f"[{corr['ci_low']:+.2f}, {corr['ci_high']:+.2f}], p = {corr['p']:.3g}")

# The Fisher interval arithmetic also works straight from reported (r, n)
# pairs, without the raw ratings:
print("\nInterval from a reported coefficient, r = -0.19 with n = 400:")
check = correlation_from_r(-0.19, 400)
print(f"  [{check.ci_low:+.2f}, {check.ci_high:+.2f}]")
