"""Regenerate src/knotpairs/data/facts.json (pinned PD codes + curated values).

Run from the repository root: python3 tools/make_facts.py
"""
import json
from pathlib import Path

from knotpairs.construct import knot, plat_levels
from knotpairs.diagram import from_pd

# PD codes with labels running along the orientation (b == d + 1 gives +).
TABLE_PD = {
    "8_21": [(6, 0, 7, 15), (0, 11, 1, 12), (1, 9, 2, 8), (13, 2, 14, 3), (3, 14, 4, 15),
             (4, 9, 5, 10), (10, 5, 11, 6), (7, 12, 8, 13)],
    "10_133": [(19, 12, 0, 13), (13, 0, 14, 1), (1, 6, 2, 7), (2, 17, 3, 18), (8, 3, 9, 4),
               (4, 16, 5, 15), (5, 10, 6, 11), (18, 8, 19, 7), (16, 9, 17, 10), (11, 14, 12, 15)],
    "K11n39": [(2, 0, 3, 21), (0, 6, 1, 5), (6, 2, 7, 1), (10, 3, 11, 4), (4, 11, 5, 12),
               (7, 16, 8, 17), (19, 8, 20, 9), (9, 15, 10, 14), (17, 13, 18, 12), (13, 19, 14, 18),
               (15, 20, 16, 21)],
    "9_35": [(17, 11, 0, 10), (9, 1, 10, 0), (1, 9, 2, 8), (13, 3, 14, 2), (3, 13, 4, 12),
             (11, 5, 12, 4), (5, 17, 6, 16), (15, 7, 16, 6), (7, 15, 8, 14)],
}
# the table diagram of 9_35 is the mirror of our P(3,3,3)
MIRROR = {"9_35"}

CONWAY = {
    "3_1": [3], "4_1": [2, 2], "5_1": [5], "5_2": [3, 2], "6_1": [4, 2], "6_2": [3, 1, 2],
    "6_3": [2, 1, 1, 2], "7_1": [7], "7_2": [5, 2], "7_3": [4, 3], "7_4": [3, 1, 3],
    "7_5": [3, 2, 2], "7_6": [2, 2, 1, 2], "7_7": [2, 1, 1, 1, 2],
}

ALIASES = {"9_35": "P(3,3,3)"}


def rec(knot_, inv, value, anchor=None, ref=None):
    r = {"knot": knot_, "invariant": inv, "value": value}
    if anchor:
        r["anchor"] = anchor
    if ref:
        r["ref"] = ref
    return r


FACTS = [
    rec("3_1*", "sigma", -2, r"\sigma({3_{1}}^{*})=-2"),
    rec("3_1*", "delta_degree", 2, r"\delta({3_{1}}^*)=2"),
    rec("3_1*", "u", 1, r"u({3_{1}}^{*})=1"),
    rec("3_1*", "bridge", 2, r"(u,{\rm bridge}-1)({3_{1}}^*)=(1,1)"),
    rec("3_1*", "braid", 2, r"(u,{\rm braid}-1)({3_{1}}^*)=(1,1)"),
    rec("3_1*", "g", 1, r"(g,{\rm bridge}-1)({3_{1}}^*)=(1,1)"),
    rec("4_1", "u", 1, r"(2k,i)=(4,1)=(c,u)(4_{1})"),
    rec("4_1", "c", 4, r"(2k,i)=(4,1)=(c,u)(4_{1})"),
    rec("5_1", "c", 5, r"(c,u)(5_1)=(5,2)"),
    rec("5_1", "u", 2, r"(c,u)(5_1)=(5,2)"),
    rec("5_2", "c", 5, r"(c,{\rm braid}-1)(5_2)=(5,2)"),
    rec("5_2", "braid", 3, r"(c,{\rm braid}-1)(5_2)=(5,2)"),
    rec("5_2", "u", 1, None, "classical: one clasp change unknots a twist knot"),
    rec("7_3", "u", 2, r"(u,{\rm braid}-1)({3_{1}}^*\#{3_{1}}^*)=(u,{\rm braid}-1)(7_{3})=(2,2)"),
    rec("7_3", "braid", 3, r"(u,{\rm braid}-1)({3_{1}}^*\#{3_{1}}^*)=(u,{\rm braid}-1)(7_{3})=(2,2)"),
    rec("3_1* # 3_1*", "u", 2, r"(u,{\rm braid}-1)({3_{1}}^*\#{3_{1}}^*)=(u,{\rm braid}-1)(7_{3})=(2,2)"),
    rec("3_1* # 3_1*", "braid", 3, r"(u,{\rm braid}-1)({3_{1}}^*\#{3_{1}}^*)=(u,{\rm braid}-1)(7_{3})=(2,2)"),
    rec("3_1* # 3_1*", "c", 6, r"(c,u)({3_{1}}^*\#{3_{1}}^*)"),
    rec("6_1", "u", 1, r"u(6_1)=u({6_1}^{*})"),
    rec("6_2", "u", 1, r"u(6_1)=u({6_1}^{*})=u(6_2)"),
    rec("6_3", "u", 1, r"u(6_3)=1"),
    rec("8_21*", "u", 1, r"(u,{\rm bridge}-1)({8_{21}}^{*})=(1,2)"),
    rec("8_21*", "bridge", 3, r"(u,{\rm bridge}-1)({8_{21}}^{*})=(1,2)"),
    rec("8_21*", "sigma", -2, r"\sigma({8_{21}}^{*})=-2"),
    rec("10_133*", "bridge", 3, r"{\rm bridge}({10_{133}}^{*})=3"),
    rec("10_133*", "sigma", -2, r"\sigma({10_{133}}^{*})=-2"),
    rec("K11n39", "gc", 3, r"g_{c}({\rm K11n39})=3"),
    rec("K11n39", "delta_degree", 6, r"\delta({\rm K11n39})=6"),
    rec("K11n39", "g", 2, r"g({\rm K11n39})=2"),
    rec("P(3,3,3)", "g", 1, r"g(P(3,3,3))=1"),
    rec("P(3,3,3)", "u", 3, r"u(P(3,3,3))=3"),
    rec("P(3,3,3)", "bridge", 3, r"{\rm bridge}(P(3,3,3))=3"),
]

# statements about whole families, interpreted by knotpairs.facts
FAMILIES = [
    {"id": "double_gc", "statement": "g_c(D(K)) = c(K) for a 2-bridge knot K",
     "anchor": r"c_{g}(D(K))=c(K)=a", "ref": "Nakamura"},
    {"id": "double_delta", "statement": "delta(D(K)) = 2 c(K) for a 2-bridge knot K",
     "anchor": r"\delta(D(K))=2c(K)", "ref": "Nakamura"},
    {"id": "double_genus", "statement": "a Whitehead double of a nontrivial knot has genus 1",
     "anchor": r"g(D(K)\#b\cdot{3_{1}}^*)=1+b", "ref": "classical"},
    {"id": "bridge_additive", "statement": "bridge(J#K) = bridge(J) + bridge(K) - 1",
     "anchor": r"{\rm bridge}(J\#K)={\rm bridge}(J)+{\rm bridge}(K)-1", "ref": "Schubert"},
    {"id": "braid_additive", "statement": "braid(J#K) = braid(J) + braid(K) - 1",
     "anchor": r"{\rm braid}(J\#K)={\rm braid}(J)+{\rm braid}(K)-1", "ref": "Birman-Menasco"},
    {"id": "trefoil_sum_u", "statement": "u(K # a.3_1*) = u(K) + a when sigma(K) = -2u(K)",
     "anchor": r"u(K\#a\cdot{3_{1}}^{*})=u(K)+a", "ref": "signature bound"},
    {"id": "unknotting_C12k", "statement": "u(C(1,2k)) = k",
     "anchor": r"u(C(1,2k))=u(T(2,-(2k+1)))=k", "ref": "signature bound"},
    {"id": "twisted_double_pattern", "statement":
     "S[tw](J): positively twisted double of J; u = 1, sigma = -2, bridge = 2 bridge(J)",
     "ref": "Schubert"},
    {"id": "pattern_P", "statement":
     "S[P](J): satellite with pattern 10_133* (clasp, wrapping number 2); u = 1, sigma = -2, "
     "bridge = 2 bridge(J) + 1", "anchor": r"P={10_{133}}^{*}", "ref": "Schubert"},
    {"id": "pattern_Q", "statement":
     "S[Q](J): satellite with pattern P(3,3,3); g = 1, bridge = 2 bridge(J) + 1",
     "anchor": r"Q=P(3,3,3)", "ref": "Schubert"},
    {"id": "triple_552", "statement": "no knot has (c, u, braid-1) = (5, 2, 2)",
     "anchor": r"(c,u,{\rm braid}-1)(K)=(5,2,2)"},
]


def _dump(obj) -> str:
    """Top-level keys one per line, every record on a single line."""
    one = lambda v: json.dumps(v, separators=(", ", ": "))
    lines = ["{"]
    items = list(obj.items())
    for i, (k, v) in enumerate(items):
        end = "," if i < len(items) - 1 else ""
        if isinstance(v, dict):
            lines.append(f" {one(k)}: {{")
            sub = list(v.items())
            for j, (kk, vv) in enumerate(sub):
                lines.append(f"  {one(kk)}: {one(vv)}" + ("," if j < len(sub) - 1 else ""))
            lines.append(" }" + end)
        elif isinstance(v, list):
            lines.append(f" {one(k)}: [")
            for j, vv in enumerate(v):
                lines.append(f"  {one(vv)}" + ("," if j < len(v) - 1 else ""))
            lines.append(" ]" + end)
        else:
            lines.append(f" {one(k)}: {one(v)}" + end)
    lines.append("}")
    return "\n".join(lines) + "\n"


def main():
    knots = {}
    for name, ent in CONWAY.items():
        D = knot(plat_levels(ent))
        knots[name] = {"table": "Rolfsen", "conway": ent,
                       "pd": [list(r) for r in D.pd], "signs": list(D.signs)}
    for name, pd in TABLE_PD.items():
        D = from_pd(pd)
        if name in MIRROR:
            D = D.mirror()
        entry = {"table": "Hoste-Thistlethwaite" if name.startswith("K") else "Rolfsen",
                 "pd": [list(r) for r in D.pd], "signs": list(D.signs)}
        if name in ALIASES:
            entry["alias"] = ALIASES[name]
        knots[name] = entry
    out = {"schema": 1, "version": "2026.10", "knots": knots, "facts": FACTS,
           "families": FAMILIES}
    path = Path(__file__).resolve().parent.parent / "src" / "knotpairs" / "data" / "facts.json"
    path.write_text(_dump(out))
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
