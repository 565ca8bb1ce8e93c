import pytest
from hypothesis import given, settings, strategies as st

from conftest import adequate_cases, diagram, random_front, row
from maxtb.diagram import mirror, parse_pd, predicted_tb, s_plus
from maxtb.front import (
    Crossing,
    FrontDiagram,
    FrontError,
    LeftCusp,
    RightCusp,
    concatenate,
    front_of_diagram,
    front_to_pd,
    reverse_orientation,
    tb,
    validate_front,
)
from maxtb.kauffman import dubrovnik, kauffman_bound

UNKNOT = FrontDiagram((LeftCusp(1), RightCusp(1)), {0: 1})


def test_standard_unknot():
    assert not validate_front(UNKNOT)
    rep = tb(UNKNOT)
    assert (rep.writhe, rep.right_cusps, rep.tb) == (0, 1, -1)
    assert dubrovnik(front_to_pd(UNKNOT)) == dubrovnik(parse_pd("O[1]"))


@pytest.mark.parametrize("events, orientation, fragment", [
    ((RightCusp(1),), {}, "underflow"),
    ((LeftCusp(1),), {0: 1}, "left open"),
    ((LeftCusp(1), Crossing(2), RightCusp(1)), {0: 1}, "out of range"),
    ((LeftCusp(1), RightCusp(1)), {}, "without orientation"),
    ((LeftCusp(1), RightCusp(1)), {0: 1, 1: 1}, "non-cusp"),
    ((LeftCusp(1), LeftCusp(2), RightCusp(1), RightCusp(1)), {0: 1, 1: 1}, "same way"),
])
def test_invalid_fronts_are_explained(events, orientation, fragment):
    problems = validate_front(FrontDiagram(events, orientation))
    assert any(fragment in p for p in problems), problems
    with pytest.raises(FrontError):
        front_to_pd(FrontDiagram(events, orientation))


def test_trefoil_front(trefoil):
    f, ims = front_of_diagram(trefoil)
    assert len(ims) == 1
    assert not validate_front(f)
    assert f.num_crossings == 3 and f.right_cusps == 2
    assert tb(f, trefoil).tb == tb(f, trefoil).predicted_tb == 1
    assert set(f.crossing_signs()) == {1}


def test_json_round_trip(trefoil):
    f, _ = front_of_diagram(trefoil)
    assert FrontDiagram.from_json(f.to_json()) == f


def test_crossingless_links():
    f, ims = front_of_diagram(parse_pd("O[3]"))
    assert not ims and f.right_cusps == 3
    assert tb(f).tb == -3


def test_split_link_is_concatenated():
    d = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2] O[1]")
    f, ims = front_of_diagram(d)
    assert not validate_front(f)
    assert tb(f).tb == predicted_tb(d) == 0
    assert concatenate([f, UNKNOT]).right_cusps == f.right_cusps + 1


def test_fronts_of_the_table():
    for name, m in adequate_cases():
        d = diagram(name, m)
        f, _ = front_of_diagram(d)
        assert not validate_front(f), name
        assert f.num_crossings == d.n
        # one eye per all-A circle
        assert f.right_cusps == s_plus(d).num_circles
        assert tb(f).tb == predicted_tb(d) == row(name)["tb_published"][m]
        assert tb(reverse_orientation(f)).tb == tb(f).tb


def test_front_is_the_same_link_as_the_diagram():
    for name, m in adequate_cases()[:50]:
        d = diagram(name, m)
        f, _ = front_of_diagram(d)
        assert dubrovnik(front_to_pd(f)) == dubrovnik(d), (name, m)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_bennequin_type_bound_on_random_fronts(data):
    f = random_front(lambda lo, hi: data.draw(st.integers(lo, hi)), max_events=16, max_crossings=8)
    assert not validate_front(f)
    if f.events:
        assert tb(f).tb <= kauffman_bound(dubrovnik(front_to_pd(f), 20))


def test_mirror_diagram_differs(trefoil):
    f, _ = front_of_diagram(mirror(trefoil))
    assert tb(f).tb == -6
