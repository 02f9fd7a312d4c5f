from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rootlet_lab.rootsys import (
    CartanType,
    all_types,
    bilinear_form,
    build,
    connected,
    coroot,
    exact_rank,
    half_floor,
    principal_upper,
    root_leq,
    support,
)

COUNTS = {"A3": 6, "B4": 16, "C5": 25, "D6": 30, "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}


@pytest.mark.parametrize("label,count", sorted(COUNTS.items()))
def test_positive_root_counts(label, count):
    assert len(build(label).positive_roots) == count


@pytest.mark.parametrize("label", ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "Z9", "X"])
def test_invalid_types_rejected(label):
    with pytest.raises(ValueError):
        CartanType.parse(label)


def test_parse_accepts_loose_spelling():
    assert CartanType.parse(" e_8 ") == CartanType("E", 8)
    assert str(CartanType("B", 5)) == "B5"


def test_all_types_count():
    assert len(all_types(8)) == 32


def test_a2_roots():
    rs = build("A2")
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert rs.theta == (1, 1)


def test_b2_roots():
    rs = build("B2")
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1), (1, 2)}
    assert rs.theta == (1, 2)
    assert rs.simple_long == (1,)


def test_e8_theta_in_paper_numbering():
    rs = build("E8")
    assert rs.format_root(rs.theta, "paper", "digits") == "23456423"
    assert rs.from_numbering(rs.to_numbering(rs.theta, "paper"), "paper") == rs.theta


def test_form_values():
    for t in all_types(8):
        rs = build(t)
        assert bilinear_form(rs, rs.theta, rs.theta) == 2
    assert bilinear_form(build("B2"), (1, 0), (1, 2)) == 0
    assert bilinear_form(build("A2"), (1, 0), (0, 1)) == -1


def test_form_accepts_rationals():
    rs = build("A2")
    assert rs.form((Fraction(1, 2), 0), (1, 0)) == 1
    assert rs.form(rs.rho, (1, 0)) == Fraction(1)


def test_coroots():
    assert coroot(build("A3"), (1, 1, 1)) == (1, 1, 1)
    assert coroot(build("B2"), (0, 1)) == (0, 2)
    # short simple root of G2 has squared length 2/3
    g2 = build("G2")
    assert g2.form((1, 0), (1, 0)) == Fraction(2, 3)
    assert coroot(g2, (1, 0)) == (3, 0)
    with pytest.raises(ValueError):
        coroot(build("A2"), (2, 1))


def test_root_order():
    a2, b2 = build("A2"), build("B2")
    assert root_leq(a2, (1, 0), (1, 1))
    assert not root_leq(a2, (1, 0), (0, 1))
    assert root_leq(b2, (1, 1), (1, 2))


def test_half_floor():
    assert half_floor(build("A3"), (1, 1, 1)) == (0, 0, 0)
    assert half_floor(build("B2"), (1, 2)) == (0, 1)
    e8 = build("E8")
    assert e8.format_root(half_floor(e8, e8.theta), "paper", "digits") == "11223211"


def test_principal_upper():
    b2 = build("B2")
    assert principal_upper(b2, b2.theta) == {b2.theta}
    assert principal_upper(build("A2"), (1, 0)) == {(1, 0), (1, 1)}
    assert principal_upper(b2, (0, 1)) == {(0, 1), (1, 1), (1, 2)}


def test_support_and_connectivity():
    a3 = build("A3")
    assert support(a3, (1, 1, 0)) == {1, 2}
    assert connected(a3, {1, 2})
    assert not connected(a3, {1, 3})
    e8 = build("E8")
    assert support(e8, e8.theta) == set(range(1, 9))
    assert connected(e8, support(e8, e8.theta))


def test_h_set_is_nonorthogonal_roots():
    for label in ("B3", "E6", "G2"):
        rs = build(label)
        want = {k for k, g in enumerate(rs.positive_roots) if rs.form(g, rs.theta) != 0}
        assert set(rs.h_set) == want


def test_roots_have_uniform_sign():
    for t in all_types(8):
        rs = build(t)
        for g in rs.all_roots:
            assert all(a >= 0 for a in g) or all(a <= 0 for a in g)
            assert rs.is_root(g)


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), max_size=5))
def test_exact_rank_matches_determinant_rule(rows):
    # rank <= 3 and rank 3 iff some 3x3 minor is nonzero
    r = exact_rank(rows)
    assert 0 <= r <= min(3, len(rows))
    if len(rows) == 3:
        a = rows
        det = (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )
        assert (r == 3) == (det != 0)


def test_exact_rank_rational_rows():
    assert exact_rank([(Fraction(1, 2), 1), (1, 2)]) == 1
    assert exact_rank([]) == 0
