"""The twelve acceptance criteria, each timed against its stated limit.

Every criterion is evaluated once per session; the per-criterion PASS/FAIL
lines are printed at the end of the pytest run (see conftest.py) or when the
file is run as a script.  Two clauses cannot hold and are strict xfails,
with their criterion lines reporting FAIL: the two-case pretzel signature
formula at i = 4 (P(3,-2,5) is the torus knot T(3,5), sigma = -8), and a
sigma/S lower bound equal to u at (c,u) = (4,1), where the only knot is 4_1
with sigma = S = 0.
"""
from __future__ import annotations

import time
from fractions import Fraction

import pytest

from knotpairs import delta, facts, geography as geo, rational, seifert, skein
from knotpairs.notation import UnsupportedExpr, parse, render, standard_diagram

import oracles

BOX = range(0, 14)
P = geo.PairId
RESULTS = {}          # n -> (ok, seconds, limit, detail)
LIMITS = {1: 1, 2: 30, 3: 5, 4: 1, 5: 10, 6: 5, 7: 1, 8: 300, 9: 1, 10: 300, 11: 60, 12: 1}


def sd(text):
    return standard_diagram(parse(text))


# -- closed-form sets, transcribed independently of geography ------------------------

def _set_cu(x, y):
    return (x, y) == (0, 0) or (x > 0 and y > 0 and y <= (x - 1) / 2)


def _set_cbraid(x, y):
    return ((x, y) == (0, 0) or (y == 1 and x >= 3 and x % 2 == 1)
            or (x >= 2 and y >= 2 and y <= x / 2))


def _set_le(x, y):
    return (x, y) == (0, 0) or (y > 0 and y <= x)


def _set_free(x, y):
    return (x, y) == (0, 0) or (x > 0 and y > 0)


CLOSED_FORM = {
    P.CU: _set_cu, P.CG: _set_cu, P.CGC: _set_cu,
    P.CBRAID: _set_cbraid,
    P.CBRIDGE: lambda x, y: (x, y) == (0, 0) or (y > 0 and y <= x / 3),   # proven part
    P.BRAIDBRIDGE: _set_le,
    P.GCG: lambda x, y: _set_le(x, y) and (x, y) != (2, 1),
    P.UBRAID: _set_free, P.UBRIDGE: _set_free, P.GBRAID: _set_free,
    P.GCBRAID: _set_free, P.GBRIDGE: _set_free,
}


def _in_points(pid):
    return [(x, y) for x in BOX for y in BOX if geo.member(pid, (x, y))]


def _witness_diagrams(c_max):
    """Standard diagrams of every witness in the box, deduplicated."""
    seen = {}
    for pid in P:
        for pt in _in_points(pid):
            e = geo.witness(pid, pt).expr
            key = render(e)
            if key in seen:
                continue
            try:
                D = standard_diagram(e)
            except UnsupportedExpr:
                continue
            if len(D.pd) <= c_max:
                seen[key] = D
    return seen


# -- criteria --------------------------------------------------------------------------

def criterion_1():
    bad = [(pid.flag, x, y) for pid in P for x in BOX for y in BOX
           if geo.member(pid, (x, y)) != CLOSED_FORM[pid](x, y)]
    return not bad, f"{len(P)} pairs x 196 points, mismatches {bad[:5]}"


def _sweep():
    """(witness count, soundness problems, CU points whose u has no sigma/S
    lower bound equal to it)."""
    bad, no_sigma, n = [], [], 0
    for pid in P:
        for pt in _in_points(pid):
            rep = geo.verify(geo.witness(pid, pt))
            n += 1
            if not rep.ok:
                bad.append((pid.flag, pt, "FAILED"))
                continue
            if pid is P.CU and pt != (0, 0):
                u = next(c for c in rep.checks if c.invariant == "u")
                if not any(b.computed and b.value == pt[1]
                           and ("sigma" in b.how or "S =" in b.how) for b in u.lower):
                    no_sigma.append(pt)
                scripts = [c for c in rep.certificates if " script " in c]
                if not scripts or not all("numerator 1," in c for c in scripts):
                    bad.append((pid.flag, pt, "no script ending at numerator 1"))
    return n, bad, no_sigma


_SWEEP = []


def sweep():
    if not _SWEEP:
        _SWEEP.append(_sweep())
    return _SWEEP[0]


def criterion_2():
    n, bad, no_sigma = sweep()
    return not bad and not no_sigma, (
        f"{n} witnesses, problems {bad[:5]}; c,u points with no sigma/S bound equal "
        f"to u: {no_sigma} (u = 1 there comes from nontriviality; at (4,1) the only "
        f"knot is 4_1 with sigma = S = 0)")


def _pretzel_sigma_rows():
    rows = []
    for i in range(3, 7):
        for p in range(1, i - 1):
            q = i - 1 - p
            s = seifert.signature(sd(f"P({2 * p + 1},-2,{2 * q + 1})"))
            rows.append((i, p, q, s, -2 * i if i < 4 else -2 * i + 2))
    return rows


def _two_bridge_sigma_bad():
    bad = [("C(1,2k)", k) for k in range(1, 7) if seifert.signature(sd(f"C(1,{2 * k})")) != 2 * k]
    bad += [("C(2k-3,1,2)", k) for k in range(4, 9)
            if seifert.signature(sd(f"C({2 * k - 3},1,2)")) != 2 * k - 4]
    return bad


def criterion_3():
    bad = _two_bridge_sigma_bad()
    bad += [(f"P({2 * p + 1},-2,{2 * q + 1})", s, f) for i, p, q, s, f in _pretzel_sigma_rows() if s != f]
    return not bad, f"mismatches (computed sigma, two-case formula): {bad}"


def criterion_4():
    bad = [k for k in range(0, 11)
           if seifert.a2(sd(f"T(2,{2 * k + 1})")) != k * (k + 1) // 2]
    return not bad, f"k = 0..10, mismatches {bad}"


def criterion_5():
    bad = []
    for i in range(3, 7):
        for p in range(1, i - 1):
            D = sd(f"P({2 * p + 1},-2,{2 * (i - 1 - p) + 1})")
            if skein.rasmussen_positive(D) != 2 * i:
                bad.append(("S", p, i - 1 - p))
    alt = positive = 0
    for key, D in _witness_diagrams(11).items():
        if not (D.pd and D.is_alternating() and D.is_reduced()):
            continue
        alt += 1
        sigma = seifert.signature(D)
        if skein.rasmussen_alternating(D) != -sigma:
            bad.append(("alt", key))
        # where the diagram is also (negative-)positive, S has a second channel
        if all(s > 0 for s in D.signs) or all(s < 0 for s in D.signs):
            positive += 1
            sign = 1 if D.signs[0] > 0 else -1
            if sign * (len(D.pd) - seifert.seifert(D).circle_count + 1) != -sigma:
                bad.append(("positive", key))
    return not bad, (f"pretzel S = 2i for i = 3..6; {alt} reduced alternating witness "
                     f"diagrams ({positive} also positive or negative); problems {bad}")


def criterion_6():
    bad, n = [], 0
    for key, D in _witness_diagrams(13).items():
        if not D.is_reduced() or seifert.seifert(D).canonical_genus < 1:
            continue
        n += 1
        if not seifert.seifert_graph_bound_check(D)["holds"]:
            bad.append(key)
    return not bad and n > 0, f"{n} reduced witness diagrams, failures {bad}"


def criterion_7():
    F = rational.fraction
    eq = rational.two_bridge_equivalent
    bad = [("C(1,2k)", k) for k in range(1, 11) if not eq(F((1, 2 * k)), F((2 * k + 1,)))]
    bad += [("C(p,0)", p) for p in range(1, 11) if not rational.is_unknot(F((p, 0)))]
    bad += [("C(3,-1,2)",)] if not rational.is_unknot(F((3, -1, 2))) else []
    bad += [("C(2i-1,0,2,1,2)", i) for i in range(1, 11)
            if not eq(F((2 * i - 1, 0, 2, 1, 2)), F((2 * i + 1, 1, 2)))]
    return not bad, f"parameters 1..10, failures {bad}"


def _ledger_problems(D):
    c = len(D.pd)
    for x in range(c):
        cl = delta.classify(D, x)
        if delta.delta_bound_crossing_change(D, x) != ((c - 1) // 2 if cl.outermost else (c + 1) // 2):
            return "bound"
        for eps in delta.all_eps(cl):
            prof = delta.linking_profile(cl, eps)
            if not (prof.lk1 and prof.lk2):
                return "lk1/lk2"
            if cl.outermost and not prof.lk3:
                return "lk3"
            if not any(v in (0, 1) for v in prof.l_values):
                return "meeting point"
    return None


def criterion_8():
    n, bad = 0, []
    for c in range(1, 7):
        for D in delta.realizable_diagrams(c):
            n += 1
            why = _ledger_problems(D)
            if why:
                bad.append((D.pd, why))
    return not bad, f"{n} signed diagrams with 1..6 crossings, failures {bad[:3]}"


def criterion_9():
    bad = []
    for p in range(5, 16, 2):
        if delta.delta_unknotting_upper(p) < delta.delta_torus(p):
            bad.append(("upper < torus", p))
        if Fraction(p * p - 1, 8) > Fraction(p * p - 2 * p - 3, 4) or p * p - 4 * p - 5 < 0:
            bad.append(("direction", p))
    K = sd("4_1")
    lo, hi = delta.delta_unknotting_lower_a2(K), delta.delta_unknotting_upper(len(K.pd))
    if not lo <= 1 <= hi:
        bad.append(("4_1", lo, hi))
    return not bad, f"odd p = 5..15; u_delta(4_1) = 1 within [{lo}, {hi}]; failures {bad}"


def criterion_10():
    out = []
    for k in ("3_1", "3_1*"):
        D = sd(f"D({k})")
        d = skein.delta_degree(skein.homfly(D, geo.DOUBLE_BUDGET))
        out.append((k, len(D.pd), d))
    ok = all(d == 2 * 3 for _, _, d in out)
    return ok, "(companion, c(D(K)), delta) = " + ", ".join(map(str, out))


def criterion_11():
    rep = facts.crosscheck()
    failed = [i.what for i in rep.items if not i.ok]
    triples = [i for i in rep.items if i.what.startswith("(c,u,braid-1)")]
    return rep.ok and bool(triples), (f"{len(rep.items)} checks ({len(triples)} triples), "
                                      f"failures {failed}")


def criterion_12():
    d = geo.tuple_dimension([(3, 1, 1), (4, 2, 1), (5, 1, 1)])
    return d == 3, f"dimension {d}"


def run(n):
    if n not in RESULTS:
        t = time.perf_counter()
        ok, detail = globals()[f"criterion_{n}"]()
        RESULTS[n] = (ok, time.perf_counter() - t, LIMITS[n], detail)
    return RESULTS[n]


def summary_lines():
    lines = []
    for n in sorted(RESULTS):
        ok, secs, limit, detail = RESULTS[n]
        tag = "PASS" if ok and secs < limit else "FAIL"
        lines.append(f"criterion {n:>2}: {tag}  ({secs:.2f} s, limit {limit} s)  {detail}")
    return lines


# -- pytest entry points -----------------------------------------------------------------

def test_criterion_2_soundness():
    ok, secs, limit, _ = run(2)
    n, bad, no_sigma = sweep()
    assert bad == []
    assert all(y == 1 for _, y in no_sigma)
    assert secs < limit


@pytest.mark.xfail(strict=True, reason="4_1 is the only knot at (c,u) = (4,1); sigma = S = 0")
def test_criterion_2_sigma_bound_at_u1():
    assert sweep()[2] == []


@pytest.mark.parametrize("n", [1, 4, 5, 6, 7, 8, 9, 10, 11, 12])
def test_criterion(n):
    ok, secs, limit, detail = run(n)
    assert ok, detail
    assert secs < limit, f"took {secs:.2f} s, limit {limit} s"


def test_criterion_3_two_bridge_formulas():
    ok, secs, limit, _ = run(3)
    assert _two_bridge_sigma_bad() == []
    assert secs < limit


@pytest.mark.parametrize("i", [3, 5, 6])
def test_criterion_3_pretzel_formula(i):
    rows = [r for r in _pretzel_sigma_rows() if r[0] == i]
    assert rows and all(s == f for _, _, _, s, f in rows)


@pytest.mark.xfail(strict=True, reason="P(3,-2,5) = T(3,5) has sigma -8, not -2i+2 = -6")
def test_criterion_3_pretzel_formula_i4():
    rows = [r for r in _pretzel_sigma_rows() if r[0] == 4]
    assert all(s == f for _, _, _, s, f in rows)


def test_i4_pretzel_is_the_torus_knot_t35():
    t35 = sd("B[3;" + ",".join(["1,2"] * 5) + "]")
    assert skein.homfly(sd("P(3,-2,5)")) == skein.homfly(t35)
    assert seifert.signature(sd("P(3,-2,5)")) == oracles.torus_signature(3, 5) == -8


if __name__ == "__main__":
    for n in range(1, 13):
        run(n)
    print("\n".join(summary_lines()))
