import random

import pytest

from conftest import diagram
from maxtb.diagram import is_plus_adequate, s_plus, seifert_circles, writhe
from maxtb.generators import braid_closure, random_braid, random_positive_braid, torus_2
from maxtb.kauffman import dubrovnik


def test_torus_trefoil_is_the_table_trefoil():
    assert dubrovnik(torus_2(3)) == dubrovnik(diagram("3_1"))


def test_torus_cinquefoil_is_the_table_cinquefoil():
    assert dubrovnik(torus_2(5)) == dubrovnik(diagram("5_1"))


def test_component_counts():
    assert torus_2(2).num_components == 2
    assert torus_2(3).num_components == 1
    assert braid_closure([], 3).unknots == 3


def test_negative_generators():
    d = braid_closure([-1, -1, -1], 2)
    assert writhe(d) == -3
    assert dubrovnik(d) == dubrovnik(diagram("3_1", mirrored=True))


@pytest.mark.parametrize("word, strands", [([0], 2), ([2], 2), ([1], 0)])
def test_bad_words(word, strands):
    with pytest.raises(ValueError):
        braid_closure(word, strands)


def test_random_positive_braids_are_adequate_and_seifert():
    rng = random.Random(7)
    for _ in range(60):
        word, s = random_positive_braid(rng)
        assert set(range(1, s)) <= set(word)
        d = braid_closure(word, s)
        r = s_plus(d)
        assert is_plus_adequate(r)
        assert r.arc_partition() == seifert_circles(d).arc_partition()
        assert r.num_circles == s


def test_random_braid_is_reproducible():
    assert random_braid(random.Random(3)) == random_braid(random.Random(3))
