"""
Abelian ideals of B2, one step at a time
========================================

B2 is small enough to see everything: four positive roots, four abelian
ideals, two long roots and therefore two fibers.
"""

from rootlet_lab import affine, ideals
from rootlet_lab.affine import AffineVector
from rootlet_lab.rootsys import build

rs = build("B2")
print("positive roots:", rs.positive_roots)
print("highest root:", rs.theta, " long simple roots:", rs.simple_long)

# Every abelian ideal I comes with a minuscule element w of the affine Weyl
# group: the positive affine roots it inverts are exactly delta - gamma, gamma in I.
at = ideals.atlas(rs)
for I in at:
    w = I.minuscule
    print(f"{sorted(I.roots)!s:32} word={list(w.word)}  length={affine.length(rs, w)}")

# The rootlet is w(2 delta - theta). For the empty ideal there is none.
for I in at.nonzero:
    print(sorted(I.roots), "-> rootlet", I.rootlet, " z =", I.z)

# Doing the same by hand for w = s2 s0, one generator at a time.
x = AffineVector(tuple(-a for a in rs.theta), 2)
print("s2 s0 (2 delta - theta) =", affine.act_by_word(rs, [2, 0], x))

# Ideals sharing a rootlet form a fiber, an interval with a min and a max.
for mu, f in at.fibers.items():
    print(f"fiber over {mu}: {len(f)} ideal(s), min {sorted(f.min_ideal.roots)}, max {sorted(f.max_ideal.roots)}")

# alpha1 is orthogonal to theta here, and its fiber has two members.
print("(alpha1, theta) =", rs.form((1, 0), rs.theta))
