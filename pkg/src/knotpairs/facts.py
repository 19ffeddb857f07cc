"""Curated invariant values with provenance, and the gate that recomputes them.

The table lives in ``data/facts.json`` (schema 1):

* ``knots``: id -> {table, pd, signs[, conway][, alias]}; the PD code is
  pinned, and knots with a ``conway`` entry are built from it (the pin must
  then agree with the builder exactly);
* ``facts``: records {knot, invariant, value[, anchor][, ref]} where ``knot``
  is a rendered knot expression (``3_1*``, ``3_1* # 3_1*``, ``P(3,3,3)``);
* ``families``: statements about whole families (doubles, satellites,
  additivity) that the geography module applies by id.

Invariant names: c, u, g, gc, braid, bridge, sigma, delta_degree.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

MIRROR_INVARIANT = {"c", "u", "g", "gc", "braid", "bridge", "delta_degree", "a2", "det"}


@dataclass(frozen=True)
class FactRecord:
    knot: str
    invariant: str
    value: int
    anchor: str | None = None
    ref: str | None = None
    via_mirror: bool = False

    @property
    def source(self) -> str:
        parts = [p for p in (self.ref, self.anchor) if p]
        return "; ".join(parts) if parts else "curated"


@lru_cache(maxsize=1)
def table() -> dict:
    text = resources.files("knotpairs").joinpath("data/facts.json").read_text()
    data = json.loads(text)
    if data.get("schema") != 1:
        raise ValueError(f"unsupported facts schema {data.get('schema')!r}")
    return data


def version() -> str:
    return table()["version"]


def conway_of(knot_id: str):
    k = table()["knots"].get(knot_id)
    return tuple(k["conway"]) if k and "conway" in k else None


def known_ids() -> list[str]:
    return list(table()["knots"])


def pinned_diagram(knot_id: str):
    from .diagram import Diagram
    k = table()["knots"].get(knot_id)
    if k is None:
        return None
    return Diagram(k["pd"], k["signs"])


def _key(knot: str) -> str:
    from .notation import parse, render
    return render(parse(knot))


@lru_cache(maxsize=None)
def _index() -> dict:
    out = {}
    for r in table()["facts"]:
        out[(_key(r["knot"]), r["invariant"])] = FactRecord(
            _key(r["knot"]), r["invariant"], int(r["value"]), r.get("anchor"), r.get("ref"))
    return out


def lookup(knot: str, invariant: str) -> FactRecord | None:
    """Exact record, or the mirror's record for mirror-insensitive invariants
    (sigma is negated).  The unknot has every invariant 0 (braid/bridge 1)."""
    from .notation import Unknot, mirror, parse, render
    e = parse(knot)
    if isinstance(e, Unknot):
        if invariant in ("braid", "bridge"):
            return FactRecord("0_1", invariant, 1, ref="trivial")
        return FactRecord("0_1", invariant, 0, ref="trivial")
    key = render(e)
    idx = _index()
    hit = idx.get((key, invariant))
    if hit is not None:
        return hit
    mk = render(mirror(e))
    hit = idx.get((mk, invariant))
    if hit is None:
        return None
    if invariant in MIRROR_INVARIANT:
        return FactRecord(key, invariant, hit.value, hit.anchor, hit.ref, True)
    if invariant == "sigma":
        return FactRecord(key, invariant, -hit.value, hit.anchor, hit.ref, True)
    return None


def family(fid: str) -> dict:
    for f in table()["families"]:
        if f["id"] == fid:
            return f
    raise KeyError(fid)


def records() -> list[FactRecord]:
    return list(_index().values())


# -- consistency gate -------------------------------------------------------------

@dataclass
class CheckItem:
    what: str
    expected: object
    computed: object
    ok: bool


@dataclass
class CrosscheckReport:
    items: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.items)

    def add(self, what, expected, computed, ok=None):
        self.items.append(CheckItem(what, expected, computed,
                                    expected == computed if ok is None else ok))

    def text(self) -> str:
        lines = []
        for i in self.items:
            tag = "ok  " if i.ok else "FAIL"
            lines.append(f"{tag} {i.what}: expected {i.expected}, computed {i.computed}")
        lines.append(f"{sum(i.ok for i in self.items)}/{len(self.items)} checks passed")
        return "\n".join(lines)


def crosscheck(skein_budget: int = 16) -> CrosscheckReport:
    from . import construct, rational, seifert, skein
    from .notation import parse, standard_diagram

    rep = CrosscheckReport()
    # pinned codes against the builders
    for kid, k in table()["knots"].items():
        D = pinned_diagram(kid)
        if "conway" in k:
            B = construct.knot(construct.plat_levels(k["conway"]))
            rep.add(f"{kid} pinned PD = Conway builder", True, (B.pd, B.signs) == (D.pd, D.signs))
            f = rational.fraction(k["conway"])
            rep.add(f"det {kid} = fraction numerator", f.p, seifert.determinant(D))
        if "alias" in k:
            A = standard_diagram(parse(k["alias"]))
            rep.add(f"{kid} HOMFLY = {k['alias']} HOMFLY",
                    skein.poly_text(skein.homfly(A)), skein.poly_text(skein.homfly(D)))
    # curated values with a computational channel
    for r in records():
        try:
            D = standard_diagram(parse(r.knot))
        except ValueError:
            continue
        inv, v = r.invariant, r.value
        if inv == "sigma":
            rep.add(f"sigma({r.knot})", v, seifert.signature(D))
        elif inv == "delta_degree" and len(D.pd) <= skein_budget:
            rep.add(f"delta({r.knot})", v, skein.delta_degree(skein.homfly(D, skein_budget)))
        elif inv == "c" and D.is_alternating() and D.is_reduced():
            rep.add(f"c({r.knot}) from reduced alternating diagram", v, len(D.pd))
        elif inv in ("g", "gc") and D.is_alternating() and D.is_reduced():
            rep.add(f"{inv}({r.knot}) from alternating diagram", v, seifert.seifert(D).canonical_genus)
        elif inv == "g":
            lo = max(conway_degree_bound(D), 0)
            rep.add(f"g({r.knot}) >= deg(Conway)/2 = {lo}", True, lo <= v)
        elif inv == "gc":
            lo = skein.morton_genus_lower(skein.homfly(D, skein_budget)) if len(D.pd) <= skein_budget else 0
            hi = seifert.seifert(D).canonical_genus
            rep.add(f"Morton {lo} <= gc({r.knot}) <= g(F(D)) = {hi}", True, lo <= v <= hi)
        elif inv == "u":
            lo = abs(seifert.signature(D)) // 2
            rep.add(f"u({r.knot}) >= |sigma|/2 = {lo}", True, lo <= v)
        elif inv == "bridge":
            nontrivial = seifert.conway_polynomial(D) != {0: 1} or seifert.determinant(D) != 1
            rep.add(f"bridge({r.knot}) >= 2 for a nontrivial knot", True, v >= 2 and nontrivial)
        elif inv == "braid" and len(D.pd) <= skein_budget:
            lo = skein.mfw_braid_lower(skein.homfly(D, skein_budget))
            rep.add(f"braid({r.knot}) >= MFW = {lo}", True, lo <= v)
    # the (c, u, braid-1) = (5, 2, 2) gap
    for name, t in triple_table().items():
        rep.add(f"(c,u,braid-1)({name})", "determined and != (5,2,2)", t,
                t is not None and t != (5, 2, 2))
    return rep


def conway_degree_bound(D) -> int:
    from . import seifert
    return max(seifert.conway_polynomial(D)) // 2


def curated_triples() -> dict:
    """(c, u, braid-1) for every curated knot where all three values are known."""
    out = {}
    keys = {k for k, _ in _index()}
    for k in sorted(keys):
        vals = [lookup(k, inv) for inv in ("c", "u", "braid")]
        if all(vals):
            out[k] = (vals[0].value, vals[1].value, vals[2].value - 1)
    return out


def triple_table() -> dict:
    """(c, u, braid-1) for every curated knot with all three values and for
    every (c,u) and (c,braid-1) witness with c = 5; None when a coordinate is
    not pinned down by the verification channels."""
    from . import geography as geo
    out = dict(curated_triples())
    for pid in (geo.PairId.CU, geo.PairId.CBRAID):
        for y in range(0, 6):
            if geo.member(pid, (5, y)):
                w = geo.witness(pid, (5, y))
                out[f"{pid.flag} witness {w}"] = geo.triple_c_u_braid(w.expr)
    return out


def triple_realizations(target) -> list:
    """Entries of ``triple_table`` that hit ``target`` or cannot exclude it."""
    return [k for k, t in triple_table().items() if t is None or t == tuple(target)]
