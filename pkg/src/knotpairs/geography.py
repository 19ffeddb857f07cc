"""Geography of two knot invariants taken jointly.

For each pair (alpha, beta) the set (alpha, beta)(K) of values realised by
knots is given as a predicate on lattice points, together with a generator
that returns an explicit knot realising each point and a verifier that
recomputes every claim it can.

Coordinates use ``braid - 1`` and ``bridge - 1`` so that both vanish exactly
on the unknot; claims store the raw invariants (braid, bridge).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache

from . import facts, rational, seifert, skein
from .linalg import rank
from .notation import (ConnectedSum, KnotExpr, Mirror, Named, Pretzel, Satellite,
                       Torus, TwoBridge, Unknot, UnsupportedExpr, WhiteheadDouble,
                       connected_sum, mirror, normalize, parse, render, repeat,
                       standard_diagram)

# skein budget for a Whitehead double part: the untwisted double of a
# 3-crossing companion has 20 crossings once the writhe is compensated
DOUBLE_BUDGET = 20
TREFOIL_M = parse("3_1*")
TREFOIL = parse("3_1")


class PairId(enum.Enum):
    CU = ("c", "u")
    CG = ("c", "g")
    CGC = ("c", "gc")
    CBRAID = ("c", "braid")
    CBRIDGE = ("c", "bridge")
    BRAIDBRIDGE = ("braid", "bridge")
    GCG = ("gc", "g")
    UBRAID = ("u", "braid")
    UBRIDGE = ("u", "bridge")
    GBRAID = ("g", "braid")
    GCBRAID = ("gc", "braid")
    GBRIDGE = ("g", "bridge")

    @property
    def invariants(self) -> tuple[str, str]:
        return self.value

    @property
    def flag(self) -> str:
        return ",".join(self.value)

    @classmethod
    def from_flag(cls, text: str) -> "PairId":
        key = tuple(t.strip() for t in text.split(","))
        for p in cls:
            if p.value == key:
                return p
        raise ValueError(f"unknown pair {text!r}; choose from "
                         + " ".join(p.flag for p in cls))


class Status(enum.Enum):
    IN = "in"
    OUT = "out"
    CONJECTURAL = "out-by-conjecture"   # only for (c, bridge-1)


# -- predicates -----------------------------------------------------------------

def _cu(x, y):
    return (x, y) == (0, 0) or (x > 0 and y > 0 and 2 * y <= x - 1)


def _cbraid(x, y):
    return ((x, y) == (0, 0) or (y == 1 and x % 2 == 1 and x >= 3)
            or (x >= 2 and y >= 2 and 2 * y <= x))


def _le(x, y):
    return (x, y) == (0, 0) or (0 < y <= x)


def _free(x, y):
    return (x, y) == (0, 0) or (x > 0 and y > 0)


_PRED = {
    PairId.CU: _cu, PairId.CG: _cu, PairId.CGC: _cu,
    PairId.CBRAID: _cbraid,
    PairId.BRAIDBRIDGE: _le,
    PairId.GCG: lambda x, y: _le(x, y) and (x, y) != (2, 1),
    PairId.UBRAID: _free, PairId.UBRIDGE: _free, PairId.GBRAID: _free,
    PairId.GCBRAID: _free, PairId.GBRIDGE: _free,
}

BOUNDARY = {   # boundary line drawn in region plots, as y = f(x)
    PairId.CU: "(x-1)/2", PairId.CG: "(x-1)/2", PairId.CGC: "(x-1)/2",
    PairId.CBRAID: "x/2", PairId.CBRIDGE: "x/3", PairId.BRAIDBRIDGE: "x",
    PairId.GCG: "x",
}


def status(pid: PairId, point) -> Status:
    x, y = (int(v) for v in point)
    if x < 0 or y < 0:
        return Status.OUT
    if pid is PairId.CBRIDGE:
        if (x, y) == (0, 0) or (y > 0 and 3 * y <= x):
            return Status.IN
        # bridge <= braid, and (c, braid-1) forces y <= x/2 for x >= 3
        if x >= 3 and y >= 1 and 2 * y <= x:
            return Status.CONJECTURAL
        return Status.OUT
    return Status.IN if _PRED[pid](x, y) else Status.OUT


def member(pid: PairId, point) -> bool:
    """Membership in the determined set (for (c, bridge-1): the proven part)."""
    return status(pid, point) is Status.IN


def out_reason(pid: PairId, point) -> str:
    x, y = point
    st = status(pid, point)
    if pid is PairId.CBRIDGE:
        if st is Status.CONJECTURAL:
            return (f"({x},{y}) has y > x/3: outside the proven set y <= x/3; the Fox "
                    "conjecture c >= 3(bridge-1) predicts no knot here")
        return f"({x},{y}) violates y <= x/2 (bridge <= braid) or the (0,0) rule"
    rule = {
        PairId.CU: "y <= (x-1)/2 with x, y > 0", PairId.CG: "y <= (x-1)/2 with x, y > 0",
        PairId.CGC: "y <= (x-1)/2 with x, y > 0",
        PairId.CBRAID: "y = 1 with x odd >= 3, or x, y >= 2 with y <= x/2",
        PairId.BRAIDBRIDGE: "0 < y <= x",
        PairId.GCG: "0 < y <= x and (x,y) != (2,1)",
    }.get(pid, "x, y > 0")
    return f"({x},{y}) violates {rule} (or is not (0,0))"


# -- witnesses --------------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    invariant: str
    value: int
    source: str


@dataclass
class Witness:
    pair: PairId
    point: tuple
    expr: KnotExpr
    claims: list
    construction: str
    scripts: list = field(default_factory=list)     # (part index, entries, script)

    def claim(self, inv):
        for c in self.claims:
            if c.invariant == inv:
                return c
        return None

    def __str__(self):
        return render(self.expr)


class OutOfRelation(ValueError):
    pass


def _coords_to_claims(pid, point, source):
    out = []
    for inv, v in zip(pid.invariants, point):
        out.append(Claim(inv, v + 1 if inv in ("braid", "bridge") else v, source))
    return out


def witness(pid: PairId, point, *, pretzel_split=None) -> Witness:
    """Explicit knot realising ``point``; ``pretzel_split`` = (p, q) picks the
    free split p + q = i - 1 in the (c, u) pretzel branch (default p = 1)."""
    x, y = (int(v) for v in point)
    st = status(pid, (x, y))
    if st is not Status.IN:
        raise OutOfRelation(out_reason(pid, (x, y)))
    if (x, y) == (0, 0):
        return Witness(pid, (0, 0), Unknot(), _coords_to_claims(pid, (0, 0), "trivial"),
                       "the unknot")
    build = _BUILDERS[pid]
    expr, how, scripts = build(x, y, pretzel_split) if pid is PairId.CU else build(x, y)
    expr = normalize(expr)
    return Witness(pid, (x, y), expr, _coords_to_claims(pid, (x, y), how), how, scripts)


def _tb(*entries):
    return TwoBridge(tuple(entries))


def _build_cu(x, y, split=None):
    if x % 2:
        k, i = (x - 1) // 2, y
        e = (2 * k - 2 * i + 1, 2 * i)
        return _tb(*e), "C(2k-2i+1,2i) with x = 2k+1", [(0, e, [(2, -i)])]
    k, i = x // 2, y
    if i == k - 1:
        if i == 1:
            return _tb(2, 2), "4_1 = C(2,2)", [(0, (2, 2), [(1, -1)])]
        if i == 2:
            return repeat(2, TREFOIL_M), "3_1* # 3_1*", \
                [(0, (-3,), [(1, 1)]), (1, (-3,), [(1, 1)])]
        p, q = split if split is not None else (1, i - 2)
        # p = 0 or q = 0 would give P(1,-2,n), which is T(2,n+2): one crossing short
        if p < 1 or q < 1 or p + q != i - 1:
            raise ValueError(f"pretzel split needs p, q >= 1 with p + q = {i - 1}")
        e = (2 * p + 1, -2, 2 * q + 1)
        # p + q changes leave P(1,-2,1), a trefoil; one more in the clasp unknots it
        return Pretzel(e), "P(2p+1,-2,2q+1) with p+q = i-1", [(0, e, [(1, -p), (2, 1), (3, -q)])]
    if i == 1:
        e = (2 * k - 2, 2)
        return _tb(*e), "C(2k-2,2)", [(0, e, [(2, -1)])]
    if i == k - 2:
        e = (2 * k - 3, 1, 2)
        return _tb(*e), "C(2k-3,1,2)", [(0, e, [(1, -(k - 3)), (2, -1)])]
    e = (2 * i - 1, 2 * k - 2 * i - 4, 2, 1, 2)
    return _tb(*e), "C(2i-1,2k-2i-4,2,1,2)", [(0, e, [(1, -(i - 1)), (4, -1)])]


def _build_cg(x, y):
    if x % 2:
        return _tb(2 * y, x - 2 * y), "C(2y,x-2y)", []
    return _tb(-2, -x + 2 * y + 1, -2 * y + 1), "C(-2,-x+2y+1,-2y+1)", []


def _build_cbraid(x, y):
    if x % 2:
        b = y
        a = (x - 2 * y + 1) // 2
        return _tb(2 * a, 2 * b - 1), "C(2a,2b-1)", []
    a = y - 1
    b = x // 2 - a
    return _tb(-2, -2 * a + 1, -2 * b + 1), "C(-2,-2a+1,-2b+1)", []


def _build_cbridge(x, y):
    return (connected_sum([_tb(2, x - 3 * y + 1), repeat(y - 1, TREFOIL_M)]),
            "C(2,x-3y+1) # (y-1).3_1*", [])


def _build_braidbridge(x, y):
    b, a = y - 1, x - y + 1
    return connected_sum([_tb(2, 2 * a - 1), repeat(b, TREFOIL_M)]), "C(2,2a-1) # b.3_1*", []


def _double_companion(a):
    return parse("C(3)") if a == 3 else _tb(2, a - 2)


def _build_gcg(x, y):
    if x == y:
        return repeat(x, TREFOIL_M), "b.3_1*", []
    if x - y == 1:
        return connected_sum([Named("K11n39"), repeat(x - 3, TREFOIL_M)]), "K11n39 # b.3_1*", []
    b, a = y - 1, x - y + 1
    return (connected_sum([WhiteheadDouble(_double_companion(a)), repeat(b, TREFOIL_M)]),
            "D(K) # b.3_1* with K 2-bridge, c(K) = a", [])


def _torus_plus(x, y):
    a, k = y - 1, x - y + 1
    return connected_sum([Torus(2, 2 * k + 1), repeat(a, TREFOIL_M)])


def _build_ubraid(x, y):
    if x >= y:
        return _torus_plus(x, y), "T(2,2k+1) # a.3_1*", []
    a, k = x - 1, y - x + 1
    return connected_sum([_tb(2, 2 * k - 1), repeat(a, TREFOIL_M)]), "C(2,2k-1) # a.3_1*", []


def _high_bridge(k, genus_version: bool):
    """Knot with (u or g, bridge-1) = (1, k) and sigma = -2 in the u case."""
    if k == 1:
        return TREFOIL_M
    if k % 2:
        return Satellite("tw", repeat((k - 1) // 2, TREFOIL_M))
    if k == 2:
        return parse("P(3,3,3)") if genus_version else parse("8_21*")
    return Satellite("Q" if genus_version else "P", repeat((k - 2) // 2, TREFOIL))


def _build_ubridge(x, y, genus_version=False):
    if x >= y:
        return _torus_plus(x, y), "T(2,2k+1) # a.3_1*", []
    a, k = x - 1, y - x + 1
    return (connected_sum([_high_bridge(k, genus_version), repeat(a, TREFOIL_M)]),
            "K_k # a.3_1* with (1,k) realised by a satellite or table knot", [])


def _build_gbraid(x, y):
    return _tb(2 * x, 2 * y - 1), "C(2a,2b-1)", []


_BUILDERS = {
    PairId.CU: _build_cu, PairId.CG: _build_cg, PairId.CGC: _build_cg,
    PairId.CBRAID: _build_cbraid, PairId.CBRIDGE: _build_cbridge,
    PairId.BRAIDBRIDGE: _build_braidbridge, PairId.GCG: _build_gcg,
    PairId.UBRAID: _build_ubraid, PairId.UBRIDGE: _build_ubridge,
    PairId.GBRAID: _build_gbraid, PairId.GCBRAID: _build_gbraid,
    PairId.GBRIDGE: lambda x, y: _build_ubridge(x, y, genus_version=True),
}


# -- per-part invariant data --------------------------------------------------------

def parts_of(e: KnotExpr) -> tuple:
    e = normalize(e)
    if isinstance(e, Unknot):
        return ()
    return e.parts if isinstance(e, ConnectedSum) else (e,)


def two_bridge_entries(e: KnotExpr):
    """Conway entries when ``e`` is a (possibly mirrored) 2-bridge knot."""
    sign = 1
    while isinstance(e, Mirror):
        sign, e = -sign, e.inner
    ent = None
    if isinstance(e, TwoBridge):
        ent = e.entries
    elif isinstance(e, Named):
        ent = facts.conway_of(e.id)
    elif isinstance(e, Torus) and 2 in (abs(e.p), abs(e.q)):
        n = e.q if abs(e.p) == 2 else e.p
        s = 1 if e.p * e.q > 0 else -1
        ent = (-s * abs(n),)          # T(2,n) with n > 0 is C(-n)
    return tuple(sign * a for a in ent) if ent is not None else None


@dataclass
class PartData:
    expr: KnotExpr
    diagram: object = None
    crossings: int | None = None
    alt_reduced: bool = False
    positive: bool = False
    sigma: int | None = None
    conway: dict | None = None
    canonical_genus: int | None = None
    circles: int | None = None
    entries: tuple | None = None
    _homfly: object = None

    def homfly(self):
        """HOMFLY within the desk budget, else None (cached)."""
        if self._homfly is None and self.diagram is not None:
            budget = DOUBLE_BUDGET if isinstance(self.expr, WhiteheadDouble) else skein.DEFAULT_BUDGET
            try:
                self._homfly = skein.homfly(self.diagram, budget)
            except skein.BudgetExceeded:
                self._homfly = False
        return self._homfly or None

    @property
    def nontrivial(self) -> bool | None:
        if self.entries is not None:
            return not rational.is_unknot(rational.fraction(self.entries))
        if self.conway is not None and self.conway != {0: 1}:
            return True
        return None


@lru_cache(maxsize=None)
def part_data(e: KnotExpr) -> PartData:
    pd = PartData(e, entries=two_bridge_entries(e))
    try:
        D = standard_diagram(e)
    except UnsupportedExpr:
        return pd
    sd = seifert.seifert(D)
    pd.diagram = D
    pd.crossings = len(D.pd)
    pd.alt_reduced = D.is_alternating() and D.is_reduced()
    pd.positive = D.is_positive()
    pd.sigma = seifert.signature(D)
    pd.conway = seifert.conway_polynomial(D)
    pd.canonical_genus = sd.canonical_genus
    pd.circles = sd.circle_count
    return pd


def _fact(e, inv):
    r = facts.lookup(render(e), inv)
    return r.value if r else None


def _bridge_of_sum(parts):
    """bridge of a sum of trefoils (Schubert additivity)."""
    return sum(_fact(p, "bridge") - 1 for p in parts) + 1


def satellite_value(e: KnotExpr, inv: str):
    """Family facts for the symbolic satellites; None when not recorded."""
    sgn = 1
    while isinstance(e, Mirror):
        sgn, e = -sgn, e.inner
    if not isinstance(e, Satellite):
        return None
    comp = parts_of(e.companion)
    bj = _bridge_of_sum(comp) if all(_fact(p, "bridge") for p in comp) else None
    table = {
        "tw": {"u": 1, "sigma": -2, "g": 1, "bridge": None if bj is None else 2 * bj},
        "P": {"u": 1, "sigma": -2, "bridge": None if bj is None else 2 * bj + 1},
        "Q": {"g": 1, "bridge": None if bj is None else 2 * bj + 1},
    }[e.pattern]
    v = table.get(inv)
    if v is not None and inv == "sigma":
        v *= sgn
    return v


_SAT_SOURCE = {"tw": "twisted_double_pattern", "P": "pattern_P", "Q": "pattern_Q"}


# -- verification ---------------------------------------------------------------------

@dataclass
class Bound:
    value: int
    how: str
    computed: bool


@dataclass
class ClaimCheck:
    invariant: str
    claimed: int
    status: str
    lower: list
    upper: list

    def describe(self) -> str:
        lo = "; ".join(f"{b.value} ({b.how}{'' if b.computed else ', fact'})" for b in self.lower)
        hi = "; ".join(f"{b.value} ({b.how}{'' if b.computed else ', fact'})" for b in self.upper)
        return f"{self.invariant} = {self.claimed}: {self.status}  lower [{lo}]  upper [{hi}]"


@dataclass
class Report:
    witness: Witness
    checks: list
    certificates: list

    @property
    def failed(self) -> int:
        return sum(c.status == "FAILED" for c in self.checks)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def text(self) -> str:
        lines = [f"{self.witness.pair.flag} {self.witness.point}: {render(self.witness.expr)}",
                 f"  construction: {self.witness.construction}"]
        lines += ["  " + c.describe() for c in self.checks]
        lines += ["  certificate: " + c for c in self.certificates]
        return "\n".join(lines)


def _judge(claimed, lower, upper) -> str:
    for b in lower:
        if b.value > claimed:
            return "FAILED"
    for b in upper:
        if b.value < claimed:
            return "FAILED"
    lo_ok = any(b.value == claimed and b.computed for b in lower)
    hi_ok = any(b.value == claimed and b.computed for b in upper)
    if lo_ok and hi_ok:
        return "VERIFIED"
    if any(b.value == claimed for b in lower) and any(b.value == claimed for b in upper):
        return "PAPER-FACT"
    if not lower and not upper:
        return "PAPER-FACT"
    # consistent but only partially pinned by the recorded facts
    return "PAPER-FACT"


def _sum_if_all(vals):
    return None if any(v is None for v in vals) else sum(vals)


def _sigma_total(parts):
    vals = []
    computed = True
    for p in parts:
        d = part_data(p)
        if d.sigma is not None:
            vals.append(d.sigma)
        else:
            s = satellite_value(p, "sigma")
            if s is None:
                s = _fact(p, "sigma")
            vals.append(s)
            computed = False
    return _sum_if_all(vals), computed


def _rasmussen_total(parts):
    vals = []
    for p in parts:
        d = part_data(p)
        if d.diagram is None:
            return None
        if d.positive:
            vals.append(skein.rasmussen_positive(d.diagram))
        elif d.alt_reduced:
            vals.append(skein.rasmussen_alternating(d.diagram))
        elif all(x < 0 for x in d.diagram.signs):
            vals.append(-(d.crossings - d.circles + 1))     # mirror of a positive diagram
        else:
            return None
    return sum(vals)


def _c(entries, head="C"):
    return head + "(" + ",".join(str(a) for a in entries) + ")"


def _script_bound(entries, script, cert, label, pretzel=False):
    final, used = rational.run_script(entries, script)
    try:
        f = rational.pretzel_fraction(final) if pretzel else rational.fraction(final)
    except ValueError:
        f = None
    ok = f is not None and rational.is_unknot(f) and rational.script_is_realizable(entries, script)
    head = "P" if pretzel else "C"
    cert.append(f"{label}: {_c(entries, head)} script {script} -> {_c(final, head)}, "
                f"numerator {f.p if f else '?'}, {used} changes"
                + ("" if ok else ", NOT AN UNKNOTTING SCRIPT"))
    return Bound(used, "unknotting script", True) if ok else None


def _part_u_upper(p, cert, supplied=None):
    d = part_data(p)
    out = []
    if supplied is not None:
        b = _script_bound(supplied[0], supplied[1], cert, render(p),
                          pretzel=isinstance(_sat(p), Pretzel))
        if b:
            out.append(b)
    elif d.entries is not None:
        lo = abs(d.sigma) // 2 if d.sigma is not None else 0
        s = rational.find_unknotting_script(d.entries, max(lo, 1) + 2)
        if s is not None:
            out.append(_script_bound(d.entries, s, cert, render(p) + " (searched)"))
    if d.crossings:
        out.append(Bound((d.crossings - 1) // 2, "u(D) <= (c(D)-1)/2", True))
    f = satellite_value(p, "u")
    if f is not None:
        out.append(Bound(f, f"family {_SAT_SOURCE[_sat(p).pattern]}", False))
    f = _fact(p, "u")
    if f is not None:
        out.append(Bound(f, "curated u", False))
    return out


def _sat(p):
    while isinstance(p, Mirror):
        p = p.inner
    return p


def _best_upper(bounds):
    """Smallest value, preferring computed among ties."""
    if not bounds:
        return None
    return min(bounds, key=lambda b: (b.value, not b.computed))


def _best_lower(bounds):
    if not bounds:
        return None
    return max(bounds, key=lambda b: (b.value, b.computed))


def _combine(per_part, op="sum", how=""):
    """Combine one chosen bound per part; computed only if every part is."""
    if any(b is None for b in per_part):
        return None
    if op == "sum":
        v = sum(b.value for b in per_part)
    else:   # (x - 1) additive, e.g. braid and bridge
        v = sum(b.value - 1 for b in per_part) + 1
    return Bound(v, how, all(b.computed for b in per_part))


def _check_u(parts, claimed, cert, scripts=()):
    lower, upper = [], []
    sig, sc = _sigma_total(parts)
    if sig is not None:
        lower.append(Bound(abs(sig) // 2, f"|sigma|/2, sigma = {sig}", sc))
    S = _rasmussen_total(parts)
    if S is not None:
        lower.append(Bound(abs(S) // 2, f"|S|/2, S = {S}", True))
    if parts:
        nt = [part_data(p).nontrivial for p in parts]
        if any(nt):
            lower.append(Bound(1, "nontrivial", True))
    else:
        lower.append(Bound(0, "unknot", True))
        upper.append(Bound(0, "unknot", True))
    given = {idx: (ent, sc) for idx, ent, sc in scripts}
    per = [_best_upper(_part_u_upper(p, cert, given.get(i))) for i, p in enumerate(parts)]
    if parts:
        b = _combine(per, "sum", "sum of part upper bounds")
        if b:
            upper.append(b)
    return lower, upper


def _check_c(e, parts, claimed, cert):
    lower, upper = [], []
    if not parts:
        return [Bound(0, "unknot", True)], [Bound(0, "unknot", True)]
    if all(part_data(p).diagram is not None for p in parts):
        D = standard_diagram(e)
        n = len(D.pd)
        upper.append(Bound(n, "c(D) of the standard diagram", True))
        if D.is_alternating() and D.is_reduced():
            lower.append(Bound(n, "reduced alternating diagram", True))
    if len(parts) == 1 and part_data(parts[0]).entries is not None:
        f = rational.fraction(part_data(parts[0]).entries)
        if not rational.is_unknot(f):
            v = rational.crossing_number_two_bridge(f)
            lower.append(Bound(v, "2-bridge positive expansion", True))
            upper.append(Bound(v, "2-bridge positive expansion", True))
    f = _fact(e, "c")
    if f is not None:
        lower.append(Bound(f, "curated c", False))
        upper.append(Bound(f, "curated c", False))
    if not lower and len(parts) == 1 and isinstance(_sat(parts[0]), Pretzel):
        b = _pretzel_c_lower(parts[0], cert)
        if b:
            lower.append(b)
    return lower, upper


def _pretzel_c_lower(p, cert):
    """c >= 2u+1 since u <= (c-1)/2; equality would make the knot T(2,2u+1)
    (a cited theorem), which the HOMFLY polynomial rules out."""
    d = part_data(p)
    lo, _ = _check_u((p,), 0, [])
    u = max((b.value for b in lo if b.computed), default=0)
    if u < 1 or d.crossings != 2 * u + 2:
        return None
    P = d.homfly()
    T = skein.homfly(standard_diagram(Torus(2, 2 * u + 1)))
    Tm = skein.homfly(standard_diagram(Torus(2, -(2 * u + 1))))
    if P is None or P in (T, Tm):
        return Bound(2 * u + 1, "c >= 2u+1", True)
    cert.append(f"{render(p)}: u >= {u} and HOMFLY differs from T(2,{2 * u + 1}) and its "
                f"mirror, so c != {2 * u + 1}")
    return Bound(2 * u + 2, "pretzel crossing-number argument", False)


def _part_g(p):
    d = part_data(p)
    lo, hi = [], []
    if d.conway is not None:
        lo.append(Bound(max(d.conway) // 2, "deg(Conway)/2", True))
    if d.canonical_genus is not None:
        hi.append(Bound(d.canonical_genus, "g(F(D))", True))
    for src in (satellite_value(p, "g"), _fact(p, "g")):
        if src is not None:
            lo.append(Bound(src, "curated g", False))
            hi.append(Bound(src, "curated g", False))
    if isinstance(_sat(p), WhiteheadDouble):
        lo.append(Bound(1, "family double_genus", False))
        hi.append(Bound(1, "family double_genus", False))
    return lo, hi


def _check_g(parts, claimed):
    if not parts:
        return [Bound(0, "unknot", True)], [Bound(0, "unknot", True)]
    los, his = zip(*(_part_g(p) for p in parts))
    lower, upper = [], []
    for pick, src, out in ((_best_lower, los, lower), (_best_upper, his, upper)):
        b = _combine([pick(list(x)) for x in src], "sum", "additive over parts")
        if b:
            out.append(b)
    # purely computed channels as well, when complete
    clo = _combine([_best_lower([b for b in x if b.computed]) for x in los], "sum", "deg(Conway)/2")
    chi = _combine([_best_upper([b for b in x if b.computed]) for x in his], "sum", "g(F(D))")
    for b, out in ((clo, lower), (chi, upper)):
        if b and all(b.value != o.value or b.computed != o.computed for o in out):
            out.append(b)
    return lower, upper


def _part_gc(p):
    d = part_data(p)
    lo, hi = [], []
    glo, ghi = _part_g(p)
    lo += [Bound(b.value, b.how, b.computed) for b in glo if b.how == "deg(Conway)/2"]
    P = d.homfly()
    if P is not None:
        lo.append(Bound(skein.morton_genus_lower(P), "Morton delta/2", True))
    if d.canonical_genus is not None:
        hi.append(Bound(d.canonical_genus, "g(F(D))", True))
    if d.alt_reduced:
        lo.append(Bound(d.canonical_genus, "alternating: g = g(F(D))", True))
    f = _fact(p, "gc")
    if f is not None:
        lo.append(Bound(f, "curated gc", False))
        hi.append(Bound(f, "curated gc", False))
    if isinstance(_sat(p), WhiteheadDouble):
        comp = _sat(p).companion
        c = part_data(comp)
        if c.entries is not None:
            a = rational.crossing_number_two_bridge(rational.fraction(c.entries))
            hi.append(Bound(a, "family double_gc", False))
            lo.append(Bound(a, "family double_delta", False))
    return lo, hi


def _check_gc(parts, claimed):
    if not parts:
        return [Bound(0, "unknot", True)], [Bound(0, "unknot", True)]
    los, his = zip(*(_part_gc(p) for p in parts))
    lower, upper = [], []
    b = _combine([_best_lower(list(x)) for x in los], "sum", "additive lower bounds")
    if b:
        lower.append(b)
    b = _combine([_best_upper(list(x)) for x in his], "sum", "sum of canonical diagrams")
    if b:
        upper.append(b)
    clo = _combine([_best_lower([b for b in x if b.computed]) for x in los], "sum", "Morton / Conway")
    if clo:
        lower.append(clo)
    return lower, upper


def _part_braid(p):
    d = part_data(p)
    lo, hi = [], []
    P = d.homfly()
    if P is not None:
        lo.append(Bound(skein.mfw_braid_lower(P), "MFW", True))
    if d.nontrivial:
        lo.append(Bound(2, "nontrivial", True))
    if d.crossings:
        hi.append(Bound(d.circles, "Seifert circles of the diagram (Yamada)", True))
    if d.entries is not None:
        f = rational.fraction(d.entries)
        if f.p > 1 and (f.residue() in (1, f.p - 1)):
            hi.append(Bound(2, "T(2,n): 2-braid", True))
        if P is not None:
            hi.append(Bound(skein.mfw_braid_lower(P), "MFW is sharp on 2-bridge knots (Murasugi)", True))
        try:
            v = rational.braid_index_family(TwoBridge(d.entries))
            lo.append(Bound(v, "2-bridge family formula", True))
            hi.append(Bound(v, "2-bridge family formula", True))
        except ValueError:
            pass
    f = _fact(p, "braid")
    if f is not None:
        lo.append(Bound(f, "curated braid", False))
        hi.append(Bound(f, "curated braid", False))
    return lo, hi


def _check_braid(parts, claimed):
    if not parts:
        return [Bound(1, "unknot", True)], [Bound(1, "unknot", True)]
    los, his = zip(*(_part_braid(p) for p in parts))
    lower, upper = [], []
    # MFW is additive in this form because v-breadth is
    Ps = [part_data(p).homfly() for p in parts]
    if all(P is not None for P in Ps):
        br = sum(skein.v_breadth(P) for P in Ps)
        lower.append(Bound(br // 2 + 1, "MFW of the sum", True))
    b = _combine([_best_lower(list(x)) for x in los], "minus1", "additivity of braid-1")
    if b:
        lower.append(Bound(b.value, b.how, False))
    b = _combine([_best_upper(list(x)) for x in his], "minus1", "stacked braids")
    if b:
        upper.append(b)
    return lower, upper


def _part_bridge(p):
    d = part_data(p)
    lo, hi = [], []
    if d.nontrivial:
        lo.append(Bound(2, "nontrivial", True))
    if d.entries is not None and d.nontrivial:
        hi.append(Bound(2, "2-bridge plat", True))
    f = satellite_value(p, "bridge")
    if f is not None:
        lo.append(Bound(f, f"family {_SAT_SOURCE[_sat(p).pattern]}", False))
        hi.append(Bound(f, f"family {_SAT_SOURCE[_sat(p).pattern]}", False))
    f = _fact(p, "bridge")
    if f is not None:
        lo.append(Bound(f, "curated bridge", False))
        hi.append(Bound(f, "curated bridge", False))
    return lo, hi


def _check_bridge(parts, claimed):
    if not parts:
        return [Bound(1, "unknot", True)], [Bound(1, "unknot", True)]
    los, his = zip(*(_part_bridge(p) for p in parts))
    lower, upper = [], []
    if len(parts) == 1:
        b = _best_lower(list(los[0]))
        if b:
            lower.append(b)
    else:
        b = _combine([_best_lower(list(x)) for x in los], "minus1", "Schubert additivity")
        if b:
            lower.append(Bound(b.value, b.how, False))
    b = _combine([_best_upper(list(x)) for x in his], "minus1", "sum of bridge presentations")
    if b:
        upper.append(b)
    # bridge <= braid
    bl, bu = _check_braid(parts, claimed)
    for u in bu:
        upper.append(Bound(u.value, "bridge <= braid (" + u.how + ")", u.computed))
    return lower, upper


def verify(w: Witness) -> Report:
    e = w.expr
    parts = parts_of(e)
    cert = []
    checks = []
    for c in w.claims:
        inv = c.invariant
        if inv == "u":
            lo, hi = _check_u(parts, c.value, cert, w.scripts)
        elif inv == "c":
            lo, hi = _check_c(e, parts, c.value, cert)
        elif inv == "g":
            lo, hi = _check_g(parts, c.value)
        elif inv == "gc":
            lo, hi = _check_gc(parts, c.value)
        elif inv == "braid":
            lo, hi = _check_braid(parts, c.value)
        elif inv == "bridge":
            lo, hi = _check_bridge(parts, c.value)
        else:
            raise ValueError(f"no verification channel for {inv}")
        checks.append(ClaimCheck(inv, c.value, _judge(c.value, lo, hi), lo, hi))
    for idx, entries, script in w.scripts:
        if _script_bound(entries, script, [], "", isinstance(_sat(parts[idx]), Pretzel)) is None:
            used = rational.run_script(entries, script)[1]
            checks.append(ClaimCheck("script", used, "FAILED", [], []))
    return Report(w, checks, cert)


# -- botany, regions, dimension ---------------------------------------------------------

def botany_equality_cg(e: KnotExpr) -> bool:
    """g = (c-1)/2 exactly for T(2,n), n odd, |n| >= 3."""
    e = normalize(e)
    parts = parts_of(e)
    if not parts:
        return False
    if len(parts) > 1:
        return False        # T(2,n) is prime
    ent = two_bridge_entries(parts[0])
    if ent is not None:
        f = rational.fraction(ent)
        return f.p >= 3 and f.residue() in (1, f.p - 1)
    d = part_data(parts[0])
    if d.alt_reduced:
        return 2 * d.canonical_genus == d.crossings - 1
    c, g = _fact(e, "c"), _fact(e, "g")
    if c is not None and g is not None:
        return 2 * g == c - 1
    raise ValueError(f"cannot decide crossing number and genus for {render(e)}")


@dataclass(frozen=True)
class RegionPoint:
    x: int
    y: int
    status: Status
    witness: str


def region(pid: PairId, x_max: int, y_max: int | None = None) -> list:
    if y_max is None:
        y_max = x_max
    if x_max < 0 or y_max < 0:
        raise ValueError("bounds must be nonnegative")
    out = []
    for x in range(x_max + 1):
        for y in range(y_max + 1):
            st = status(pid, (x, y))
            w = render(witness(pid, (x, y)).expr) if st is Status.IN else ""
            out.append(RegionPoint(x, y, st, w))
    return out


def region_csv(points) -> str:
    import csv
    import io
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["x", "y", "status", "witness"])
    for p in points:
        wr.writerow([p.x, p.y, p.status.value, p.witness])
    return buf.getvalue()


def region_svg(pid: PairId, points) -> str:
    """Lattice dot plot: filled dots are realised, open dots are not,
    grey dots are excluded only conjecturally.  Boundary line dashed."""
    xm = max(p.x for p in points)
    ym = max(p.y for p in points)
    s, m = 30, 40
    W, H = 2 * m + s * xm, 2 * m + s * ym

    def X(x):
        return m + s * x

    def Y(y):
        return H - m - s * y
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
             f'viewBox="0 0 {W} {H}">',
             f'<rect width="{W}" height="{H}" fill="white"/>',
             f'<line x1="{X(0)}" y1="{Y(0)}" x2="{X(xm)}" y2="{Y(0)}" stroke="black"/>',
             f'<line x1="{X(0)}" y1="{Y(0)}" x2="{X(0)}" y2="{Y(ym)}" stroke="black"/>']
    a, b = pid.invariants
    lab = lambda v: v + "-1" if v in ("braid", "bridge") else v
    lines.append(f'<text x="{W - m}" y="{H - 10}" font-size="12" text-anchor="end">{lab(a)}</text>')
    lines.append(f'<text x="8" y="{m - 10}" font-size="12">{lab(b)}</text>')
    bnd = BOUNDARY.get(pid)
    if bnd:
        f = {"(x-1)/2": lambda x: (x - 1) / 2, "x/2": lambda x: x / 2,
             "x/3": lambda x: x / 3, "x": lambda x: x}[bnd]
        x0 = 1 if bnd == "(x-1)/2" else 0
        x1 = min(xm, xm if bnd != "x" else ym)
        lines.append(f'<line x1="{X(x0)}" y1="{Y(f(x0)):.1f}" x2="{X(x1)}" '
                     f'y2="{Y(f(x1)):.1f}" stroke="grey" stroke-dasharray="4 3"/>')
    for p in points:
        if p.status is Status.IN:
            lines.append(f'<circle cx="{X(p.x)}" cy="{Y(p.y)}" r="4" fill="black"/>')
        elif p.status is Status.CONJECTURAL:
            lines.append(f'<circle cx="{X(p.x)}" cy="{Y(p.y)}" r="4" fill="lightgrey" stroke="grey"/>')
        else:
            lines.append(f'<circle cx="{X(p.x)}" cy="{Y(p.y)}" r="2" fill="none" stroke="grey"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def tuple_dimension(vectors) -> int:
    vectors = [tuple(int(a) for a in v) for v in vectors]
    if not vectors:
        return 0
    if len({len(v) for v in vectors}) != 1:
        raise ValueError("tuples must have the same arity")
    return rank([list(v) for v in vectors])


def triple_c_u_braid(e: KnotExpr):
    """(c, u, braid-1) when every coordinate is pinned by verification
    channels, else None."""
    out = []
    parts = parts_of(e)
    for inv in ("c", "u", "braid"):
        if inv == "c":
            lo, hi = _check_c(e, parts, 0, [])
        elif inv == "u":
            lo, hi = _check_u(parts, 0, [])
        else:
            lo, hi = _check_braid(parts, 0)
        lv = max((b.value for b in lo), default=None)
        hv = min((b.value for b in hi), default=None)
        if lv is None or hv is None or lv != hv:
            return None
        out.append(lv - 1 if inv == "braid" else lv)
    return tuple(out)
