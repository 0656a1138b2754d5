"""Generate a clean relation, inject typos, repair, and score the result.

Demonstrates the evaluation loop: precision is the share of changed cells
that now match the gold values, recall the share of injected errors that
were corrected. Run with: python3 demos/quality_vs_gold.py
"""

import random

from fdrepair import FD, GenConfig, evaluate, generate, swipe

rng = random.Random(7)

# start from data that satisfies one rule exactly, then corrupt it
gold, _ = generate(GenConfig(300, 4, seed=7))
fd = FD({"a1"}, "a2")
for tid in gold.tids:
    gold.set(tid, "a2", gold.get(tid, "a1"))

dirty = gold.copy()
for tid in rng.sample(dirty.tids, 30):
    dirty.set(tid, "a2", "typo%d" % rng.randrange(5))

out = swipe(dirty, [fd], seed=0)
report = evaluate(dirty, out.repaired, gold)
print("changed %d cells, %d of them correctly; %d cells were wrong"
      % (report.repaired_cells, report.correctly_repaired_cells,
         report.erroneous_cells))
print("precision=%.3f recall=%.3f f=%.3f"
      % (report.precision, report.recall, report.f_score))
