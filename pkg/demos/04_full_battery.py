"""
Running the whole battery
=========================

Every check in every irreducible type up to rank 8, followed by the table
for the fiber-singleton question, which is reported rather than asserted.
Set ROOTLET_LAB_MAX_RANK to widen the brute-force oracle.
"""

import time

from rootlet_lab import verify

t0 = time.perf_counter()
reports = verify.verify("all")
print(f"{len(reports)} types in {time.perf_counter() - t0:.1f} s")

for r in reports:
    counts = {}
    for c in r.checks:
        counts[c.status] = counts.get(c.status, 0) + 1
    print(r.type_label, counts)

print()
print(verify.singleton_table())
