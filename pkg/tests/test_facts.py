import os
import re
from pathlib import Path

import pytest

from knotpairs import facts
from knotpairs.notation import parse, standard_diagram


def test_lookup_examples():
    assert facts.lookup("6_1", "u").value == 1
    assert facts.lookup("K11n39", "delta_degree").value == 6
    assert facts.lookup("0_1", "u").value == 0
    assert facts.lookup("0_1", "braid").value == 1
    assert facts.lookup("7_7", "u") is None


def test_mirror_fallback():
    r = facts.lookup("8_21", "sigma")            # stored for the mirror
    assert r.value == 2 and r.via_mirror
    assert facts.lookup("3_1", "u").value == 1
    assert facts.lookup("3_1 # 3_1", "c").value == 6


def test_table_shape():
    t = facts.table()
    assert t["schema"] == 1 and facts.version() == t["version"]
    for r in facts.records():
        assert isinstance(r.value, int) and r.source
    for fid in ("double_gc", "double_delta", "bridge_additive", "braid_additive"):
        assert facts.family(fid)["id"] == fid
    with pytest.raises(KeyError):
        facts.family("nope")


def test_pinned_codes_build():
    for kid in facts.known_ids():
        D = facts.pinned_diagram(kid)
        assert D.euler_ok()
        assert standard_diagram(parse(kid)) == D
    assert facts.pinned_diagram("12a_1") is None


def test_named_knots_in_the_table():
    assert set(facts.known_ids()) >= {"3_1", "4_1", "7_7", "8_21", "10_133", "K11n39", "9_35"}
    assert facts.conway_of("5_2") == (3, 2)


def _balanced(s):
    depth = 0
    for ch in s:
        depth += {"{": 1, "}": -1}.get(ch, 0)
        if depth < 0:
            return False
    return depth == 0


def test_anchors_are_formula_fragments():
    anchors = [r.anchor for r in facts.records() if r.anchor]
    anchors += [f["anchor"] for f in facts.table()["families"] if "anchor" in f]
    assert anchors
    for a in anchors:
        assert _balanced(a) and re.search(r"[=(]", a), a


@pytest.mark.skipif(not os.environ.get("KNOTPAIRS_ANCHOR_TEXT"),
                    reason="set KNOTPAIRS_ANCHOR_TEXT to the reference text to check anchors verbatim")
def test_anchors_appear_verbatim():
    text = Path(os.environ["KNOTPAIRS_ANCHOR_TEXT"]).read_text()
    anchors = [r.anchor for r in facts.records() if r.anchor]
    anchors += [f["anchor"] for f in facts.table()["families"] if "anchor" in f]
    missing = [a for a in anchors if a not in text]
    assert not missing


def test_crosscheck_passes():
    rep = facts.crosscheck()
    assert rep.ok, rep.text()
    text = rep.text()
    assert "ok   sigma(8_21*): expected -2, computed -2" in text
    assert "ok   delta(3_1*): expected 2, computed 2" in text
    assert re.search(r"^ok   det 5_2 = fraction numerator: expected 7, computed 7$", text, re.M)


def test_no_522_triple():
    assert facts.triple_realizations((5, 2, 2)) == []
    assert facts.curated_triples()["5_2"] == (5, 1, 2)
    assert "5_2" in facts.triple_realizations((5, 1, 2))
