"""
Joins in the root poset
=======================

Any two positive roots have a least upper bound. When their supports touch
it is the coordinate maximum; otherwise the two roots are bridged by the
chain of simple roots joining the supports in the Dynkin diagram.
"""

import itertools

from rootlet_lab import lattice
from rootlet_lab.rootsys import build

a3 = build("A3")
for eta, beta in [((1, 0, 0), (0, 1, 0)), ((1, 0, 0), (0, 0, 1)), ((1, 1, 0), (1, 1, 1))]:
    r = lattice.join(a3, eta, beta)
    print(eta, "v", beta, "=", r.value, r.mode, "" if r.bridge is None else f"bridge {r.bridge}")

# The closed form against a brute-force scan of upper bounds, over all of E8.
e8 = build("E8")
modes = {}
for eta, beta in itertools.combinations(e8.positive_roots, 2):
    r = lattice.join(e8, eta, beta)
    assert r.value == lattice.join_oracle(e8, eta, beta)
    modes[r.mode] = modes.get(r.mode, 0) + 1
print("E8 pairs by mode:", modes)

# Joins of long roots stay long, e.g. in F4.
f4 = build("F4")
longs = f4.long_positive_roots
print("F4 long joins long:", all(f4.is_long(lattice.join(f4, a, b).value) for a in longs for b in longs))

# Roots with a fixed coefficient on one simple root form a lattice.
s = lattice.delta_slice(e8, 4, 3)
print(f"E8 slice alpha4 = 3: {len(s.roots)} roots, min {s.minimum}, max {s.maximum}, lattice {s.is_lattice}")
