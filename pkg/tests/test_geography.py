import pytest

from knotpairs import geography as geo
from knotpairs.notation import parse, render

P = geo.PairId


def ins(points):
    return {(p.x, p.y) for p in points if p.status is geo.Status.IN}


def test_member_examples():
    assert geo.member(P.CU, (6, 2))
    assert not geo.member(P.CU, (4, 2))
    assert not geo.member(P.CBRAID, (4, 1)) and geo.member(P.CBRAID, (5, 1))
    assert not geo.member(P.GCG, (2, 1))
    assert not geo.member(P.CU, (-1, 0))


def test_pair_flags():
    for pid in P:
        assert P.from_flag(pid.flag) is pid
    assert P.from_flag("c, u") is P.CU
    with pytest.raises(ValueError):
        P.from_flag("u,c")


def test_cbridge_statuses():
    assert geo.status(P.CBRIDGE, (9, 3)) is geo.Status.IN
    assert geo.status(P.CBRIDGE, (4, 2)) is geo.Status.CONJECTURAL
    assert geo.status(P.CBRIDGE, (4, 3)) is geo.Status.OUT
    assert "Fox conjecture" in geo.out_reason(P.CBRIDGE, (4, 2))


def test_out_of_relation_names_the_inequality():
    with pytest.raises(geo.OutOfRelation, match=r"y <= \(x-1\)/2"):
        geo.witness(P.CU, (4, 2))
    with pytest.raises(geo.OutOfRelation, match=r"\(2,1\)"):
        geo.witness(P.GCG, (2, 1))


def test_region_examples():
    assert ins(geo.region(P.CU, 7, 3)) == {(0, 0), (3, 1), (4, 1), (5, 1), (5, 2), (6, 1),
                                          (6, 2), (7, 1), (7, 2), (7, 3)}
    gcg = ins(geo.region(P.GCG, 3, 3))
    assert {(x, y) for x in range(4) for y in range(1, x + 1)} - gcg == {(2, 1)}
    assert ins(geo.region(P.CBRAID, 5, 2)) == {(0, 0), (3, 1), (4, 2), (5, 1), (5, 2)}
    with pytest.raises(ValueError):
        geo.region(P.CU, -1)


def test_region_csv_golden():
    text = geo.region_csv(geo.region(P.CU, 3, 1))
    assert text == ("x,y,status,witness\n0,0,in,0_1\n0,1,out,\n1,0,out,\n1,1,out,\n"
                    "2,0,out,\n2,1,out,\n3,0,out,\n3,1,in,\"C(1,2)\"\n")


def test_region_svg():
    svg = geo.region_svg(P.CBRIDGE, geo.region(P.CBRIDGE, 6))
    assert svg.startswith("<svg") and svg.endswith("</svg>\n")
    assert 'stroke-dasharray="4 3"' in svg
    assert svg.count('fill="lightgrey"') == sum(
        geo.status(P.CBRIDGE, (x, y)) is geo.Status.CONJECTURAL
        for x in range(7) for y in range(7))


def test_witness_cu_odd():
    w = geo.witness(P.CU, (7, 1))
    assert render(w.expr) == "C(5,2)"
    rep = geo.verify(w)
    assert all(c.status == "VERIFIED" for c in rep.checks)
    u = next(c for c in rep.checks if c.invariant == "u")
    assert any(b.value == 1 and "sigma" in b.how for b in u.lower)
    assert any("C(5,0), numerator 1" in c for c in rep.certificates)


def test_witness_cu_pretzel():
    w = geo.witness(P.CU, (8, 3))
    assert render(w.expr) == "P(3,-2,3)"
    u = next(c for c in geo.verify(w).checks if c.invariant == "u")
    assert u.status == "VERIFIED"
    assert any(b.value == 3 and "S = 6" in b.how for b in u.lower)
    w2 = geo.witness(P.CU, (10, 4), pretzel_split=(2, 1))
    assert render(w2.expr) == "P(5,-2,3)"
    assert geo.verify(w2).ok
    # a band of one crossing makes the pretzel a (2,n) torus knot
    with pytest.raises(ValueError, match="p, q >= 1"):
        geo.witness(P.CU, (10, 4), pretzel_split=(0, 3))


def test_witness_cu_sum_of_trefoils():
    w = geo.witness(P.CU, (6, 2))
    assert render(w.expr) == "3_1* # 3_1*"
    assert all(c.status == "VERIFIED" for c in geo.verify(w).checks)


def test_witness_double():
    w = geo.witness(P.GCG, (3, 1))
    assert render(w.expr) == "D(C(3))"
    gc = next(c for c in geo.verify(w).checks if c.invariant == "gc")
    assert any(b.value == 3 and b.computed for b in gc.lower)
    assert gc.status == "PAPER-FACT"


def test_witness_satellite_bridge_is_a_fact():
    rep = geo.verify(geo.witness(P.UBRIDGE, (1, 4)))
    br = next(c for c in rep.checks if c.invariant == "bridge")
    assert br.status == "PAPER-FACT" and rep.ok


def test_bad_claim_is_reported_failed():
    w = geo.witness(P.CU, (7, 1))
    w.claims[1] = geo.Claim("u", 2, "tampered")
    rep = geo.verify(w)
    assert rep.failed == 1 and not rep.ok


def test_bad_script_is_reported_failed():
    w = geo.witness(P.CU, (7, 1))
    w.scripts = [(0, (5, 2), [(2, 1)])]
    assert any(c.invariant == "script" and c.status == "FAILED" for c in geo.verify(w).checks)


@pytest.mark.parametrize("pid", list(P))
def test_small_box_has_no_failures(pid):
    for x in range(8):
        for y in range(8):
            if geo.member(pid, (x, y)):
                rep = geo.verify(geo.witness(pid, (x, y)))
                assert rep.ok, rep.text()


def test_botany():
    assert geo.botany_equality_cg(parse("C(5)"))
    assert not geo.botany_equality_cg(parse("C(2,2)"))
    assert not geo.botany_equality_cg(parse("3_1 # 3_1"))
    assert not geo.botany_equality_cg(parse("0_1"))


def test_tuple_dimension():
    assert geo.tuple_dimension([(3, 1, 1), (4, 2, 1), (5, 1, 1)]) == 3
    assert geo.tuple_dimension([]) == 0
    assert geo.tuple_dimension([(2, 4), (1, 2)]) == 1
    with pytest.raises(ValueError):
        geo.tuple_dimension([(1, 2), (1, 2, 3)])


def test_triples():
    assert geo.triple_c_u_braid(parse("C(3,2)")) == (5, 1, 2)
    assert geo.triple_c_u_braid(parse("C(1,4)")) == (5, 2, 1)
    assert geo.triple_c_u_braid(parse("3_1* # 3_1*")) == (6, 2, 2)


def test_cu_pretzel_scripts_end_at_unknot():
    for pt in [(8, 3), (10, 4), (12, 5)]:
        rep = geo.verify(geo.witness(P.CU, pt))
        assert rep.ok
        assert any("-> P(1,0,1), numerator 1" in c for c in rep.certificates)
        assert any(f"so c != {pt[0] - 1}" in c for c in rep.certificates)
