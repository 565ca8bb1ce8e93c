from hypothesis import given, strategies as st

from maxtb.poly import LaurentPoly2

terms = st.dictionaries(st.tuples(st.integers(-6, 6), st.integers(0, 6)), st.integers(-5, 5), max_size=6)


def test_zero_terms_are_dropped():
    p = LaurentPoly2({(1, 0): 2, (2, 1): 0})
    assert p.terms == {(1, 0): 2}
    assert not LaurentPoly2()


def test_parse_and_print_round_trip():
    p = LaurentPoly2.parse("- a^-5*z - a^-4 + 2*a^-2 + a^-2*z^2")
    assert LaurentPoly2.parse(str(p)) == p
    assert p.max_a_degree() == -2 and p.min_a_degree() == -5


def test_a_slice_lists_top_terms():
    p = LaurentPoly2({(3, 0): 2, (3, 2): 1, (1, 1): -4})
    assert p.a_slice(3) == [(0, 2), (2, 1)]


@given(terms, terms, terms)
def test_ring_axioms(f, g, h):
    f, g, h = LaurentPoly2(f), LaurentPoly2(g), LaurentPoly2(h)
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == LaurentPoly2()


@given(terms)
def test_json_round_trip(f):
    p = LaurentPoly2(f)
    assert LaurentPoly2.from_json(p.to_json()) == p


@given(terms)
def test_a_inverse_is_an_involution(f):
    p = LaurentPoly2(f)
    assert p.substitute_a_inverse().substitute_a_inverse() == p
