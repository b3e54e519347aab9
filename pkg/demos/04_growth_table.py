"""
How the constraint automaton grows with k
==========================================

The lower bound is 2^k states; the construction is about 4^k in the worst
case. Nobody knows which is right. This prints the measured size for
n = 2k and writes the table next to the docs. Pass a larger maximum k as
the first argument (k = 8 needs about a minute and 1.3 GB).
"""

import csv
import sys
from pathlib import Path

from kpath_nfa.cli import BENCH_COLUMNS, bench_rows

max_k = int(sys.argv[1]) if len(sys.argv) > 1 else 6
out = Path(__file__).resolve().parent.parent / "docs" / "growth.csv"

rows = []
print(f"{'k':>3} {'size':>10} {'size/2^k':>10} {'size/4^k':>10} {'build ms':>10}")
for row in bench_rows(2, max_k):
    rows.append(row)
    k = row["k"]
    print(f"{k:>3} {row['size']:>10} {row['size'] / 2**k:>10.1f} "
          f"{row['size'] / 4**k:>10.2f} {row['build_ms']:>10.0f}", flush=True)

with out.open("w", newline="") as fh:
    writer = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS)
    writer.writeheader()
    writer.writerows(rows)
print("wrote", out)
