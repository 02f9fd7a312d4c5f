"""
The E8 pairing table
====================

For each simple root alpha of E8 the minimal elements of I(alpha)_min are
paired with the maximal roots outside I(alpha)_max, and each pair sums to theta.
Labels use numbering="paper", the E8 node order in which theta reads 23456423.
"""

from rootlet_lab import central, export, ideals
from rootlet_lab.rootsys import build

e8 = build("E8")
print("theta =", e8.format_root(e8.theta, "paper", "digits"))

table = export.table1_markdown(e8, "paper")
print(table)
print("matches the stored reference:", table == export.table1_reference())

# One row in detail: alpha7 in paper numbering.
rep = central.stunning_pairs(e8, e8.simple_index_from_numbering(7, "paper"))
for nu, nu2 in rep.pairs:
    print(e8.format_root(nu, "paper", "digits"), "+", e8.format_root(nu2, "paper", "digits"))

# How the 255 nonzero ideals split under the centraliser conditions.
tally = {"P3": 0, "P2 only": 0, "P1 only": 0, "none": 0}
for I in ideals.atlas(e8).nonzero:
    p = central.classify(e8, I).profile
    key = "P3" if p.p3 else "P2 only" if p.p2 else "P1 only" if p.p1 else "none"
    tally[key] += 1
print(tally)
