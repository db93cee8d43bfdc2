import pytest

from liefaces.algebra import formal_dimension, poincare_polynomial
from liefaces.catalog import (
    EXCEPTIONAL,
    EXCEPTIONAL_DIM_RANK,
    best_ct_bound,
    group_data,
    is_degenerate,
    is_simple_simply_connected,
    list_entries,
    presentation_of,
    record,
    so_mod2_heights,
)
from liefaces.covering import RationalType
from liefaces.errors import DomainError, MissingParameter, UnknownField, UnknownGroup
from liefaces.exact import poly_eval

PARAMETRIC = ["Torus", "U", "SU", "Sp", "SO_odd", "SO_even", "SO_mod2"]


def all_entries():
    for g in EXCEPTIONAL:
        for f in record(g).fields:
            yield g, f, None
    for g in PARAMETRIC:
        rec = record(g)
        for n in range(rec.min_n, 11):
            for f in rec.fields:
                yield g, f, n


def test_presentation_examples():
    assert presentation_of("F4", "F3").pairs() == sorted([(8, 2), (3, 1), (7, 1), (11, 1), (15, 1)])
    assert presentation_of("SU", "Q", 4).pairs() == [(3, 1), (5, 1), (7, 1)]
    e8 = presentation_of("E8", "Q")
    assert [g.degree for g in e8.generators] == [3, 15, 23, 27, 35, 39, 47, 59]
    assert all(g.height == 1 for g in e8.generators)


def test_truncation_heights():
    assert presentation_of("E7", "F2").pairs()[:3] == [(3, 3), (5, 3), (9, 3)]
    e8 = dict(presentation_of("E8", "F2").pairs())
    assert (e8[3], e8[5], e8[9], e8[15]) == (15, 7, 3, 3)


def test_presentation_errors():
    with pytest.raises(UnknownGroup):
        presentation_of("E9", "Q")
    with pytest.raises(UnknownField):
        presentation_of("G2", "F7")
    with pytest.raises(MissingParameter):
        presentation_of("SU", "Q")
    with pytest.raises(DomainError):
        presentation_of("G2", "Q", 3)


@pytest.mark.parametrize(
    "n, pairs, dim", [(3, [(1, 3)], 3), (4, [(1, 3), (3, 1)], 6), (5, [(1, 7), (3, 1)], 10)]
)
def test_so_mod2_examples(n, pairs, dim):
    pres = so_mod2_heights(n)
    assert pres.pairs() == pairs
    assert formal_dimension(pres) == dim


def test_so_mod2_domain():
    with pytest.raises(DomainError):
        so_mod2_heights(2)


@pytest.mark.parametrize("n", range(3, 30))
def test_so_mod2_dimension(n):
    assert formal_dimension(so_mod2_heights(n)) == n * (n - 1) // 2


def test_group_data_examples():
    assert group_data("G2") == (14, 2, RationalType((1, 5)))
    assert group_data("Sp", 3) == (21, 3, RationalType((1, 3, 5)))
    assert group_data("E7") == (133, 7, RationalType((1, 5, 7, 9, 11, 13, 17)))
    with pytest.raises(UnknownGroup):
        group_data("Spin", 5)


@pytest.mark.parametrize("group, f, n", list(all_entries()))
def test_every_entry_is_a_poincare_duality_algebra(group, f, n):
    pres = presentation_of(group, f, n)
    p = poincare_polynomial(pres)
    d = p.degree
    assert d == formal_dimension(pres) == record(group).dim_of(n)
    assert [p[i] for i in range(d + 1)] == [p[d - i] for i in range(d + 1)]
    assert p[0] == 1 and min(p.coeffs) >= 0
    if d >= 1:
        assert poly_eval(p, -1) == 0


@pytest.mark.parametrize("group", EXCEPTIONAL)
def test_exceptional_dimensions(group):
    d, l = EXCEPTIONAL_DIM_RANK[group]
    for f in ("F2", "F3", "F5", "Q"):
        assert formal_dimension(presentation_of(group, f)) == d
    assert group_data(group)[:2] == (d, l)


@pytest.mark.parametrize("group", EXCEPTIONAL)
def test_f5_matches_rational_except_e8(group):
    same = poincare_polynomial(presentation_of(group, "F5")) == poincare_polynomial(presentation_of(group, "Q"))
    assert same == (group != "E8")


def test_dim_rank_table():
    for n in range(1, 11):
        assert group_data("U", n)[:2] == (n * n, n)
        assert group_data("Sp", n)[:2] == (n * (2 * n + 1), n)
        assert group_data("SO_odd", n)[:2] == (n * (2 * n + 1), n)
        assert group_data("SO_even", n)[:2] == (n * (2 * n - 1), n)
        k = 2 * n + 1
        assert group_data("SO_odd", n)[0] == k * (k - 1) // 2
        assert group_data("SO_even", n)[0] == (2 * n) * (2 * n - 1) // 2
    for n in range(2, 11):
        assert group_data("SU", n)[:2] == (n * n - 1, n - 1)


def test_m1_is_one_for_simple_simply_connected():
    for g in EXCEPTIONAL:
        assert is_simple_simply_connected(g)
        assert group_data(g)[2].m[0] == 1
    for g, lo in (("SU", 2), ("Sp", 1)):
        for n in range(lo, 11):
            assert is_simple_simply_connected(g, n)
            assert group_data(g, n)[2].m[0] == 1
    assert group_data("U", 3)[2].m[0] == 0
    assert not is_simple_simply_connected("U", 3)


def test_so_even_degenerate_flag():
    assert is_degenerate("SO_even", 1) and is_degenerate("SO_even", 2)
    assert not is_degenerate("SO_even", 3)
    assert group_data("SO_even", 2)[2] == RationalType((1, 1))


def test_list_entries():
    names = [str(e) for e in list_entries()]
    assert "G2 [F2,F3,F5,Q]" in names
    assert any(s.startswith("SO_mod2 (parametric n)") for s in names)
    assert sum(1 for e in list_entries() if not e.parametric) == 5
    assert names == [str(e) for e in list_entries()]


def test_best_ct_bound():
    assert best_ct_bound("G2").value == 44
    assert best_ct_bound("E8").value == 5870


def test_catalog_vertex_bounds_exceed_simplex():
    for group, f, n in all_entries():
        pres = presentation_of(group, f, n)
        d = formal_dimension(pres)
        if d >= 1:
            assert best_ct_bound(group, n).value >= d + 2
