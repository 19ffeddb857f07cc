import pytest
from hypothesis import given, settings, strategies as st

from knotpairs.notation import (BraidClosure, ConnectedSum, Mirror, Named, ParseError,
                                Pretzel, Satellite, Torus, TwoBridge, Unknot,
                                UnsupportedExpr, WhiteheadDouble, mirror, normalize,
                                parse, render, standard_diagram)


def test_parse_examples():
    assert parse("C(2,2)") == TwoBridge((2, 2))
    assert parse("3_1* # 3_1*") == ConnectedSum((Mirror(Named("3_1")), Mirror(Named("3_1"))))
    assert parse("0_1") == Unknot()
    assert parse("P(3,-2,3)") == Pretzel((3, -2, 3))
    assert parse("T(2,5)") == Torus(2, 5)
    assert parse("B[3;1,-2,1,-2]") == BraidClosure((1, -2, 1, -2), 3)
    assert parse("D(3_1)") == WhiteheadDouble(Named("3_1"), 1)
    assert parse("D(C(3),-)") == WhiteheadDouble(TwoBridge((3,)), -1)
    assert parse("S[tw](2*3_1*)").pattern == "tw"
    assert parse("K11n39") == Named("K11n39")


def test_render_examples():
    assert render(TwoBridge((2, 3))) == "C(2,3)"
    assert render(Pretzel((3, -2, 3))) == "P(3,-2,3)"
    assert render(parse("2*3_1*")) == "3_1* # 3_1*"
    assert render(Satellite("Q", parse("3_1 # 3_1"))) == "S[Q](3_1 # 3_1)"


def test_repeat_and_unknot_parts_vanish():
    assert render(parse("0*3_1")) == "0_1"
    assert render(parse("3_1 # 0_1 # 4_1")) == "3_1 # 4_1"
    assert render(parse("3 * 3_1*")) == "3_1* # 3_1* # 3_1*"


def test_mirror_distributes_over_sums():
    assert render(parse("(3_1 # 4_1*)*")) == "3_1* # 4_1"
    assert parse("3_1**") == Named("3_1")


@pytest.mark.parametrize("text,pos", [
    ("C(2,3", 5), ("C(2,,3)", 4), ("3_1 #", 5), ("X(1)", 0), ("T(2)", 0),
    ("B[2;2]", 0), ("S[R](3_1)", 2), ("-1*3_1", 0), ("C(2,3) 4_1", 7),
])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.pos == pos


def test_unsupported_builders():
    with pytest.raises(UnsupportedExpr):
        standard_diagram(parse("T(3,5)"))
    with pytest.raises(UnsupportedExpr):
        standard_diagram(parse("S[P](3_1)"))
    with pytest.raises(UnsupportedExpr):
        standard_diagram(parse("9_42"))


def test_standard_diagram_examples():
    D = standard_diagram(parse("C(3)"))
    assert len(D.pd) == 3 and D.is_alternating()
    P = standard_diagram(parse("P(3,-2,3)"))
    assert len(P.pd) == 8 and P.is_positive() and not P.is_alternating()
    assert len(standard_diagram(Unknot()).pd) == 0


def test_braid_closure_of_a_link_is_rejected():
    with pytest.raises(ValueError):
        standard_diagram(parse("B[3;1,2,-1]"))


# -- round trip ----------------------------------------------------------------

ints = st.integers(-6, 6).filter(lambda a: a != 0)
atoms = st.one_of(
    st.lists(ints, min_size=1, max_size=4).map(lambda v: TwoBridge(tuple(v))),
    st.lists(ints, min_size=1, max_size=4).map(lambda v: Pretzel(tuple(v))),
    st.sampled_from(["3_1", "4_1", "7_7", "K11n39", "8_21"]).map(Named),
    st.sampled_from([2, -2]).flatmap(lambda p: st.integers(-9, 9).map(lambda q: Torus(p, q))),
)


def _exprs():
    leaf = st.one_of(atoms, atoms.map(mirror))
    return st.recursive(
        leaf,
        lambda inner: st.one_of(
            st.lists(inner, min_size=2, max_size=3).map(lambda ps: ConnectedSum(tuple(ps))),
            inner.map(mirror),
            inner.map(lambda e: WhiteheadDouble(e, 1)),
            inner.map(lambda e: Satellite("tw", e)),
        ),
        max_leaves=5)


@settings(max_examples=200, deadline=None)
@given(_exprs())
def test_render_parse_round_trip(e):
    n = normalize(e)
    assert parse(render(n)) == n
    assert render(parse(render(n))) == render(n)


@settings(max_examples=200, deadline=None)
@given(_exprs())
def test_mirror_is_an_involution(e):
    n = normalize(e)
    assert normalize(mirror(mirror(n))) == n
