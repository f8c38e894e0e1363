"""
Comparison-table scoring and risk ranking
==========================================

Objects are ranked pairwise: count mode tallies, for each ordered pair, on
how many parameters the first object's degree is at least the second's. An
object's score is its row sum minus its column sum; scores above the
threshold are called high-risk.

The published end-to-end result (70% accuracy on the ten-patient cohort)
flows through the study's own 72-column product table, which is kept as an
opaque fixture because it cannot be rebuilt from the study's variable
definitions. Rebuilding the product from the formulas instead is one flag
away and happens to score better.
"""
from fuzzysoft import (
    builtin_table1,
    classify,
    comparison_table,
    default_variable_specs,
    evaluate,
    fuzzify_cohort,
    scores,
    score_pipeline,
)
from fuzzysoft.fixtures import GROUND_TRUTH, published_product_table

# The study-faithful route: score the published 72-column product table.
table = comparison_table(published_product_table(), mode="count")
report = scores(table)
predictions = classify(report, threshold=0.0)
accuracy = evaluate(predictions, GROUND_TRUTH)

print("scores over the published product table:")
for oid in report.universe:
    r, t, s = report.triple(oid)
    print(f"  {oid:>6}  row {r:4d}  column {t:4d}  score {s:5d}  -> {predictions[oid]}")
print(f"accuracy against the ground-truth split: {accuracy:.2f}")

# The recomputed route: fuzzify, product, compare, score, classify in one call.
specs = default_variable_specs()
sets = fuzzify_cohort(builtin_table1(), specs)
recomputed = score_pipeline(sets, combiner="max", mode="count", threshold=0.0)
labels = {r.id: r.label for r in builtin_table1()}
print(f"\nrecomputed product ({recomputed.parameter_count} columns) instead:")
for oid in recomputed.universe:
    print(f"  {oid:>6}  score {recomputed.score(oid):6d}  -> {recomputed.predictions[oid]}")
print(f"accuracy: {evaluate(recomputed.predictions, labels):.2f}")
