import pytest

from conftest import diagram, table
from maxtb.diagram import mirror, parse_pd
from maxtb.kauffman import (
    CACHE_ENV,
    OracleLimitError,
    dubrovnik,
    dubrovnik_regular,
    kauffman_bound,
    kauffman_report,
    kauffman_to_dubrovnik,
    max_a_coefficients,
    mirror_image,
    parse_knotinfo_kauffman,
)
from maxtb.poly import LaurentPoly2


def published(name):
    r = next(r for r in table() if r["name"] == name)
    return kauffman_to_dubrovnik(parse_knotinfo_kauffman(r["kauffman_published"]), 1)


def test_unknot_is_one():
    assert dubrovnik(parse_pd("O[1]")) == LaurentPoly2.constant(1)


def test_kinks_are_normalized_away():
    one = LaurentPoly2.constant(1)
    assert dubrovnik(parse_pd("X[1,1,2,2]")) == one
    assert dubrovnik(parse_pd("X[1,2,2,1]")) == one
    assert dubrovnik_regular(parse_pd("X[1,1,2,2]")) != one


def test_two_component_unlink_is_delta():
    # delta = 1 + (a - 1/a) / z
    delta = LaurentPoly2({(0, 0): 1, (1, -1): 1, (-1, -1): -1})
    assert dubrovnik(parse_pd("O[2]")) == delta
    assert dubrovnik(parse_pd("O[3]")) == delta * delta


@pytest.mark.parametrize("name", ["3_1", "4_1", "5_1"])
def test_small_knots_match_published(name):
    assert dubrovnik(diagram(name)) == published(name)


def test_whole_table_matches_published():
    for r in table():
        assert dubrovnik(parse_pd(r["pd"])) == published(r["name"]), r["name"]


def test_mirror_rule_on_dubrovnik():
    for r in table()[:30]:
        d = parse_pd(r["pd"])
        assert dubrovnik(mirror(d)) == mirror_image(dubrovnik(d))


def test_mirror_rule_on_kauffman_f():
    # F of the mirror is F(1/a, z); converted to D this is the (1/a, -z) rule
    for r in table()[:30]:
        f = parse_knotinfo_kauffman(r["kauffman_published"])
        assert kauffman_to_dubrovnik(f.substitute_a_inverse(), 1) == dubrovnik(mirror(parse_pd(r["pd"])))


def test_bound_and_top_slice_for_trefoil(trefoil):
    rep = kauffman_report(trefoil)
    assert rep.bound == 1 == kauffman_bound(rep.polynomial)
    assert list(rep.top_slice) == max_a_coefficients(rep.polynomial)
    assert all(c >= 0 for _, c in rep.top_slice)


def test_crossing_limit():
    with pytest.raises(OracleLimitError):
        dubrovnik(diagram("5_1"), max_crossings=4)


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    d = diagram("4_1")
    first = dubrovnik(d)
    assert list(tmp_path.iterdir())
    assert dubrovnik(d) == first


def test_odd_degree_term_is_rejected():
    with pytest.raises(ValueError):
        kauffman_to_dubrovnik(LaurentPoly2({(1, 0): 1}), 1)


def test_cache_keys_see_every_component(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    one = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")
    two = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2] X[7,9,8,10] X[9,7,10,8]")
    first = dubrovnik(one)
    assert dubrovnik(two) != first
    monkeypatch.delenv(CACHE_ENV)
    # split union multiplies by delta
    delta = dubrovnik(parse_pd("O[2]"))
    assert dubrovnik(two) == delta * first * dubrovnik(parse_pd("X[1,3,2,4] X[3,1,4,2]"))
