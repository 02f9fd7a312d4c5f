import itertools

import pytest
from hypothesis import given, settings, strategies as st

from rootlet_lab import lattice
from rootlet_lab.rootsys import build

A2, A3, B2 = build("A2"), build("A3"), build("B2")


def test_join_examples():
    r = lattice.join(A2, (1, 0), (0, 1))
    assert (r.value, r.mode, r.bridge) == ((1, 1), lattice.OVERLAP_MAX, None)
    r = lattice.join(A3, (1, 0, 0), (0, 0, 1))
    assert (r.value, r.mode, r.bridge) == ((1, 1, 1), lattice.DISJOINT_BRIDGE, (0, 1, 0))
    r = lattice.join(B2, (1, 1), (1, 1))
    assert (r.value, r.mode) == ((1, 1), lattice.COMPARABLE)


def test_join_rejects_non_roots():
    with pytest.raises(ValueError):
        lattice.join(A2, (1, 0), (2, 1))
    with pytest.raises(ValueError):
        lattice.join(A2, (-1, 0), (0, 1))


def test_oracle_examples():
    assert lattice.join_oracle(B2, (1, 0), (0, 1)) == (1, 1)
    for g in B2.positive_roots:
        assert lattice.join_oracle(B2, B2.theta, g) == B2.theta


@pytest.mark.parametrize("label", ["G2", "F4", "D5", "E6"])
def test_join_matches_oracle(label):
    rs = build(label)
    for a, b in itertools.combinations(rs.positive_roots, 2):
        assert lattice.join(rs, a, b).value == lattice.join_oracle(rs, a, b)


def test_join_many():
    assert lattice.join_many(B2, [B2.theta]) == B2.theta
    f4 = build("F4")
    long_simple = [f4.simple_roots[a - 1] for a in f4.simple_long]
    assert lattice.join_many(f4, long_simple) == f4.sum_of_simple(f4.simple_long)
    with pytest.raises(ValueError):
        lattice.join_many(B2, [])


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 119), min_size=3, max_size=3))
def test_join_many_permutation_invariant_e8(idx):
    e8 = build("E8")
    roots = [e8.positive_roots[k] for k in idx]
    assert len({lattice.join_many(e8, p) for p in itertools.permutations(roots)}) == 1


def test_commutative_roots():
    assert lattice.commutative_roots(A2) == set(A2.positive_roots)
    assert lattice.commutative_roots(B2) == {(1, 0), (1, 1), (1, 2)}


def test_noncommutative_maximum_is_half_theta():
    for label in ("B4", "D6", "E7", "G2"):
        rs = build(label)
        rest = rs.full_mask & ~rs.mask_of(lattice.commutative_roots(rs))
        assert rs.roots_of(rs.maximal_elements(rest)) == (rs.half_floor(rs.theta),)


def test_slices():
    s = lattice.delta_slice(B2, 2, 2)
    assert s.roots == ((1, 2),) and s.is_lattice
    s = lattice.delta_slice(A3, 2, 1)
    assert set(s.roots) == {(0, 1, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1)}
    assert (s.minimum, s.maximum) == ((0, 1, 0), (1, 1, 1))
    empty = lattice.delta_slice(A3, 2, 2)
    assert empty.roots == () and empty.minimum is None
    with pytest.raises(ValueError):
        lattice.delta_slice(A3, 4, 1)
