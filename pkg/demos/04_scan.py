"""Classifying every small instance and looking for ones no filter decides.

An instance that is not supersolvable but passes both necessary conditions
for freeness would be a candidate for a free, non-supersolvable arrangement.
"""

# %%
from collections import Counter

from psiarr import scan

report = scan(max_n=3, pool=[1, 2], max_psi_size=1)
print(report.counts)

# %%
# Non-supersolvable instances whose polynomial still factors over the integers.
print(len(report.undetermined), "undetermined")

# %%
# Chordal instances that fail only because of the labels.
labels_only = [r for r in report.records if r["chordal"] and not r["supersolvable"]]
print(Counter(r["verdict"] for r in labels_only))

# %%
print(report.table().splitlines()[0])
