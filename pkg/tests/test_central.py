import pytest

from rootlet_lab import central, ideals
from rootlet_lab.export import table1_reference
from rootlet_lab.rootsys import build

A2, A3, B2 = build("A2"), build("A3"), build("B2")


def _ideal(rs, roots):
    return ideals.atlas(rs).ideal(roots)


def test_maximal_ideal_centralises_itself():
    I = _ideal(B2, [(1, 2), (1, 1), (1, 0)])
    prof = central.centraliser(B2, I)
    assert prof.root_part == I.roots
    assert prof.toral_dim == 0
    assert prof.p3 and prof.self_centralising


def test_theta_alone_in_a2():
    prof = central.centraliser(A2, _ideal(A2, [(1, 1)]))
    assert prof.toral_dim == 1
    assert not prof.p1
    # e_{-alpha1} commutes with e_theta? no: -alpha1 + theta = alpha2 is a root
    assert all(sum(g) > 0 for g in prof.root_part)


def test_empty_ideal_centraliser_is_everything():
    prof = central.centraliser(B2, _ideal(B2, []))
    assert prof.toral_dim == 2
    assert prof.root_part == set(B2.all_roots)
    assert not (prof.p1 or prof.p2 or prof.p3)


def test_e8_minimal_ideal_centraliser():
    e8 = build("E8")
    alpha = e8.simple_roots[0]
    prof = central.centraliser(e8, ideals.mu_min(e8, alpha))
    assert prof.root_part == ideals.mu_max(e8, alpha).roots


def test_classify_b2():
    c = central.classify(B2, _ideal(B2, [(1, 2)]))
    assert c.ok and not c.profile.p1 and not c.full_rank
    c = central.classify(B2, _ideal(B2, [(1, 2), (1, 1)]))
    assert c.ok and c.profile.p3 and c.rootlet_in_long_simple
    assert c.profile.positive_mask == ideals.mu_max(B2, (1, 0)).mask
    with pytest.raises(ValueError):
        central.classify(B2, _ideal(B2, []))


@pytest.mark.parametrize("label", ["A4", "B3", "C3", "D4", "F4", "G2"])
def test_maximal_ideals_have_p3(label):
    rs = build(label)
    for I in ideals.atlas(rs).maximal_ideals():
        c = central.classify(rs, I)
        assert c.ok and c.profile.p3 and I.rootlet in rs.simple_roots


def test_stunning_pairs_b2():
    rep = central.stunning_pairs(B2, 1)
    assert (rep.left, rep.right) == (((1, 1),), ((0, 1),))
    assert rep.pairs == (((1, 1), (0, 1)),)
    with pytest.raises(ValueError):
        central.stunning_pairs(B2, 2)


def test_stunning_pairs_a3():
    rep = central.stunning_pairs(A3, 2)
    assert set(rep.left) == {(1, 1, 0), (0, 1, 1)}
    assert set(rep.right) == {(0, 0, 1), (1, 0, 0)}
    assert all(tuple(a + b for a, b in zip(x, y)) == A3.theta for x, y in rep.pairs)
    assert rep.ok and rep.right_in_h


def test_stunning_pairs_e8_row7():
    e8 = build("E8")
    rep = central.stunning_pairs(e8, e8.simple_index_from_numbering(7, "paper"))
    fmt = lambda gs: [e8.format_root(g, "paper", "digits") for g in gs]
    assert fmt(rep.left) == ["11123212"]
    assert fmt(rep.right) == ["12333211"]


def test_sigma_pairs():
    assert central.sigma_pairs(A3, [2]) == central.stunning_pairs(A3, 2)
    rep = central.sigma_pairs(A3, [1, 2])
    assert rep.ok and rep.left == ((1, 1, 0),) and rep.right == ((0, 0, 1),)
    e7 = build("E7")
    rep = central.sigma_pairs(e7, e7.simple_long)
    assert rep.right == (e7.half_floor(e7.theta),)
    assert rep.left == (central.theta_minus_half(e7),)


def test_sigma_pairs_whole_of_type_a_pairs_theta_with_zero():
    rep = central.sigma_pairs(A3, [1, 2, 3])
    assert rep.ok and rep.pairs == ((A3.theta, (0, 0, 0)),)


def test_sigma_pairs_rejections():
    with pytest.raises(ValueError):
        central.sigma_pairs(A3, [1, 3])
    with pytest.raises(ValueError):
        central.sigma_pairs(B2, [2])
    with pytest.raises(ValueError):
        central.sigma_pairs(B2, [])


def test_unique_container():
    at = ideals.atlas(A3)
    for a in A3.simple_long:
        assert central.unique_container(A3, at.mu_max(A3.simple_roots[a - 1])) == a
    assert central.unique_container(A2, _ideal(A2, [(1, 1)])) is None
    assert central.containing_maximal(A2, _ideal(A2, [(1, 1)])) == [1, 2]


def test_pairing_table_e8_shape():
    rows = central.pairing_table(build("E8"), "paper")
    assert len(rows) == len(table1_reference().splitlines()) - 2
    assert [r.index for r in rows][:3] == [1, 2, 2]
    assert all(sum(r.min_of_min) + sum(r.max_of_complement) == 29 for r in rows)
