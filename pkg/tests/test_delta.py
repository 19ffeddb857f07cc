from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from knotpairs import delta
from knotpairs.diagram import Diagram, DiagramError
from knotpairs.notation import parse, standard_diagram


def sd(text):
    return standard_diagram(parse(text))


def test_trefoil_classification():
    D = sd("3_1")
    for x in range(3):
        cl = delta.classify(D, x)
        assert cl.m == 2 and len(cl.U & cl.S) <= 1 and cl.outermost


def test_clasp_of_twist_knot():
    for n in (1, 3, 5):
        D = sd(f"C(2,{n})")
        for x in (0, 1):
            cl = delta.classify(D, x)
            assert cl.outermost and cl.S == frozenset()
            assert delta.linking_profile(cl).l_values == (0,) * (cl.m + 1)


def test_kink():
    cl = delta.classify(Diagram([(0, 0, 1, 1)], [1]), 0)
    assert cl.m == 0 and not (cl.O or cl.U or cl.S or cl.M)
    prof = delta.linking_profile(cl)
    assert prof.l_values == (0,) and prof.lk1 and prof.lk3


def test_classify_bad_crossing():
    with pytest.raises(DiagramError):
        delta.classify(sd("3_1"), 3)


def test_eps_validation():
    D = sd("7_4")
    cl = next(c for c in (delta.classify(D, x) for x in range(7)) if c.U & c.S)
    with pytest.raises(ValueError):
        delta.linking_profile(cl, {})


def test_rho_is_a_bijection():
    for m in range(0, 7):
        for i in range(0, m + 1):
            assert sorted(delta.rho(i, m, j) for j in range(1, m + 1)) == list(range(1, m + 1))


def test_crossing_change_bound():
    D = sd("3_1")
    assert all(delta.delta_bound_crossing_change(D, x) == 1 for x in range(3))
    N = sd("C(2,7)")
    x = next(x for x in range(9) if not N.is_outermost(x))
    assert delta.delta_bound_crossing_change(N, x) == 5
    assert delta.delta_bound_crossing_change(Diagram([(0, 0, 1, 1)], [1]), 0) == 0


def test_unknotting_diagram_bound():
    assert delta.unknotting_diagram_bound(sd("3_1")) == (Fraction(1), "u(D) <= (c-1)/2")
    v, tag = delta.unknotting_diagram_bound(sd("4_1"), not_torus_2p=True)
    assert v == Fraction(1) and "(c-2)/2" in tag
    v, tag = delta.unknotting_diagram_bound(sd("5_2"))
    assert v == Fraction(1) and "(c-3)/2" in tag
    with pytest.raises(ValueError):
        delta.unknotting_diagram_bound(Diagram.unknot())


def test_quadratic_and_torus_values():
    assert delta.delta_unknotting_upper(4) == 1
    assert delta.delta_torus(5) == 3
    assert delta.delta_unknotting_lower_a2(sd("4_1")) == 1
    with pytest.raises(ValueError):
        delta.delta_unknotting_upper(3)
    with pytest.raises(ValueError):
        delta.delta_torus(4)


def test_bound_chain_text():
    lines = delta.bound_chain(sd("4_1"))
    assert lines[0] == "c(D) = 4"
    assert "u_delta <= floor((c^2-2c-3)/4) = 1" in lines
    assert "u_delta >= |a2| = 1" in lines
    assert delta.bound_chain(sd("3_1"))[1].startswith("c < 4")


def _ledger_ok(D):
    c = len(D.pd)
    for x in range(c):
        cl = delta.classify(D, x)
        bound = delta.delta_bound_crossing_change(D, x)
        assert bound == ((c - 1) // 2 if cl.outermost else (c + 1) // 2)
        for eps in delta.all_eps(cl):
            prof = delta.linking_profile(cl, eps)
            assert prof.lk1 and prof.lk2
            if cl.outermost:
                assert prof.lk3
            assert prof.l_values[prof.meeting_index()] in (0, 1)
            assert delta.ledger_moves(cl, prof) <= bound


def test_enumeration_counts():
    # one planar curve with one crossing (two sign choices), and the
    # three-crossing trefoil curve appears among the n = 3 diagrams
    assert sum(1 for _ in delta.realizable_diagrams(1)) == 2
    alt = [D for D in delta.realizable_diagrams(3) if D.is_alternating() and D.is_reduced()]
    assert alt and all(len(D.pd) == 3 for D in alt)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ledger_properties_exhaustive_small(n):
    for D in delta.realizable_diagrams(n):
        _ledger_ok(D)


@given(st.sampled_from(["5_2", "6_1", "6_2", "7_4", "7_7", "P(3,-2,3)", "3_1 # 4_1",
                        "C(2,1,1,1,2)", "K11n39"]))
def test_ledger_properties_on_named_diagrams(text):
    _ledger_ok(sd(text))
