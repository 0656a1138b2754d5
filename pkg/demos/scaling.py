"""Time repairs over synthetic workloads of growing size.

Grows the row count at a fixed schema width, then the width at a fixed
row count, printing the mean wall-clock per cell. Run with:
python3 demos/scaling.py [repetitions]
"""

import sys

from fdrepair.cli import bench_cells

reps = int(sys.argv[1]) if len(sys.argv) > 1 else 3

print("rows scaling (5 attributes):")
for cell in bench_cells([1_000, 10_000, 100_000], [5], reps, seed=0):
    print("  %7d rows  %6.3f s" % (cell["rows"], cell["mean_s"]))

print("attribute scaling (10,000 rows):")
for cell in bench_cells([10_000], [5, 10, 15, 20, 25], reps, seed=0):
    print("  %7d attrs %6.3f s" % (cell["attrs"], cell["mean_s"]))
