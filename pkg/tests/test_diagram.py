import pytest
from hypothesis import given, settings, strategies as st

from knotpairs import construct, seifert
from knotpairs.diagram import (Diagram, DiagramError, LinkDiagram, connected_sum_diagram,
                               diagram_from_json, from_pd, parse_pd_text)
from knotpairs.notation import parse, standard_diagram

import oracles


def sd(text):
    return standard_diagram(parse(text))


def test_crossing_counts():
    assert len(Diagram.unknot().pd) == 0
    assert sd("C(2,3)").crossing_count() == 5
    assert sd("P(3,-2,3)").crossing_count() == 8
    assert sd("P(5,-2,3)").crossing_count() == 10


def test_mirror_and_writhe():
    D = sd("C(2,3)")
    assert D.mirror().mirror() == D
    assert D.mirror().writhe() == -D.writhe()
    assert Diagram.unknot().writhe() == 0
    assert construct.braid_closure([1, 1, 1]).writhe() == 3


def test_kink_diagram():
    K = Diagram([(0, 0, 1, 1)], [1])
    assert not K.is_reduced() and K.nugatory(0)
    C = Diagram.from_link(K.crossing_change(0))
    assert seifert.determinant(C) == 1 and seifert.conway_polynomial(C) == {0: 1}


def test_alternating_and_reduced():
    D = sd("C(2,2)")
    assert D.is_alternating() and D.is_reduced()
    assert not sd("P(3,-2,3)").is_alternating()


def test_outermost_crossings():
    assert all(sd("3_1").is_outermost(x) for x in range(3))
    for n in (1, 3, 5, 7):
        D = sd(f"C(2,{n})")
        # crossings 0 and 1 form the clasp of the plat
        assert D.is_outermost(0) and D.is_outermost(1)
    S = sd("3_1 # 3_1")
    assert all(S.is_outermost(x) for x in range(6))
    T = sd("7_2")
    assert len(T.pd) == 7 and not T.is_outermost(1)


def test_connected_sum_with_unknot_is_identity():
    T = sd("3_1")
    assert connected_sum_diagram(Diagram.unknot(), T) == T
    assert connected_sum_diagram(T, Diagram.unknot()) == T


def test_connected_sum_counts_and_alternation():
    S = connected_sum_diagram(sd("3_1"), sd("4_1"))
    assert len(S.pd) == 7 and S.is_alternating()
    assert seifert.determinant(S) == 15


def test_smoothing_gives_two_components():
    L = sd("3_1").smooth_oriented(0)
    assert isinstance(L, LinkDiagram) and L.component_count() == 2


def test_text_and_json_round_trips():
    D = sd("7_7")
    assert parse_pd_text(D.pd_text()) == D
    assert diagram_from_json(D.to_json()) == D
    assert from_pd(D.pd) == D


def test_invalid_pd_codes():
    with pytest.raises(DiagramError):
        Diagram([(0, 1, 2, 3)], [1])
    with pytest.raises(DiagramError):
        parse_pd_text("X[0,1,1]x")
    # two disjoint kinks: a two-component link
    with pytest.raises(DiagramError):
        Diagram([(0, 0, 1, 1), (2, 2, 3, 3)], [1, 1])


def test_euler_check_on_corpus():
    for t in ("3_1", "7_6", "P(3,-2,5)", "D(3_1)", "K11n39", "B[4;1,2,3,1,-2,3,-2]"):
        D = sd(t)
        assert D.euler_ok()
        assert len(D.faces) == len(D.pd) + 2


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=9))
def test_braid_closures_match_fox_determinant(word):
    try:
        D = construct.braid_closure(word, 3)
    except DiagramError:
        return                  # closure is a link
    assert D.euler_ok()
    assert seifert.determinant(D) == oracles.fox_determinant(D.pd)
