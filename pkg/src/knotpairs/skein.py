"""HOMFLY-PT polynomial by skein recursion, and the bounds read off from it.

Convention:  v^-1 P(L+) - v P(L-) = z P(L0),  P(unknot) = 1.
With this choice the positive trefoil (closure of s1^3) has
P = 2v^2 - v^4 + v^2 z^2, the maximal z-degree of a knot is even and the
Morton-Franks-Williams bound reads  braid >= (v-breadth)/2 + 1.

Algorithm: walk each component from a base point (components ordered by
their smallest edge label, each started at that label).  The first crossing
met on its under strand is switched,

    P(L+) = v^2 P(L-) + v z P(L0)      P(L-) = v^-2 P(L+) - v^-1 z P(L0),

and a diagram with no such crossing is descending, hence an unlink.  The
switched diagram keeps its labels so the walk is unchanged and the recursion
terminates; smoothed diagrams are relabelled and memoised.  Kinks are
removed for free (P is an ambient isotopy invariant in this normalisation)
and split pieces are factored.
"""
from __future__ import annotations

from .diagram import Diagram, LinkDiagram, _is_in, _through, over_in, over_out
from .seifert import seifert

Poly = dict  # (v exponent, z exponent) -> int


class BudgetExceeded(RuntimeError):
    """Crossing count above the skein budget: a desk-scale limit, not a failure."""


DEFAULT_BUDGET = 16

ONE: Poly = {(0, 0): 1}
LOOP: Poly = {(-1, -1): 1, (1, -1): -1}     # (v^-1 - v)/z, one extra split circle


def padd(p: Poly, q: Poly, scale: int = 1, dv: int = 0, dz: int = 0) -> Poly:
    out = dict(p)
    for (a, b), c in q.items():
        k = (a + dv, b + dz)
        out[k] = out.get(k, 0) + scale * c
        if out[k] == 0:
            del out[k]
    return out


def pmul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for (a, b), c in p.items():
        for (d, e), f in q.items():
            k = (a + d, b + e)
            out[k] = out.get(k, 0) + c * f
    return {k: c for k, c in out.items() if c}


def ppow(p: Poly, n: int) -> Poly:
    out = ONE
    for _ in range(n):
        out = pmul(out, p)
    return out


def poly_text(p: Poly) -> str:
    """Canonical text: terms sorted by z then v exponent."""
    if not p:
        return "0"
    terms = []
    for (a, b) in sorted(p, key=lambda t: (t[1], t[0])):
        c = p[(a, b)]
        mon = "".join(s for s in (_mon("v", a), _mon("z", b)) if s)
        if not mon:
            terms.append(f"{c:+d}")
        elif c in (1, -1):
            terms.append(("+" if c > 0 else "-") + mon)
        else:
            terms.append(f"{c:+d}*{mon}")
    s = " ".join(terms)
    return s[1:] if s.startswith("+") else s


def _mon(x, e):
    if e == 0:
        return ""
    return x if e == 1 else f"{x}^{e}"


# -- raw diagram operations on (pd, signs) -----------------------------------

def _slots(pd, signs):
    heads, tails = {}, {}
    for k, row in enumerate(pd):
        for s, e in enumerate(row):
            if _is_in(s, signs[k]):
                heads[e] = (k, s)
            else:
                tails[e] = (k, s)
    return heads, tails


def _canon(pd, signs, loops):
    """Relabel edges consecutively along components; drop kinks; returns a
    list of connected pieces (pd, signs) and the number of free loops."""
    pd = [list(r) for r in pd]
    signs = list(signs)
    # union-find joins from kink removal
    while True:
        kink = None
        for k, row in enumerate(pd):
            for s in range(4):
                if row[s] == row[(s + 1) % 4]:
                    kink = (k, s)
                    break
            if kink:
                break
        if kink is None:
            break
        k, s = kink
        row = pd[k]
        a, b = row[(s + 2) % 4], row[(s + 3) % 4]
        del pd[k]
        del signs[k]
        if a == b:
            # figure-eight curve with one crossing: a free circle
            loops += 1
            continue
        # identify a and b
        for r in pd:
            for i in range(4):
                if r[i] == b:
                    r[i] = a
    if not pd:
        return [], loops
    heads, tails = _slots(pd, signs)
    # connected pieces of the crossing graph
    parent = list(range(len(pd)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x
    for e, (k, _) in heads.items():
        parent[find(k)] = find(tails[e][0])
    groups: dict = {}
    for k in range(len(pd)):
        groups.setdefault(find(k), []).append(k)
    pieces = []
    for ks in groups.values():
        sub = [pd[k] for k in ks]
        ssg = [signs[k] for k in ks]
        pieces.append(_sequential(sub, ssg))
    pieces.sort()
    return pieces, loops


def _sequential(pd, signs):
    heads, tails = _slots(pd, signs)
    order = []
    done = set()
    for k in range(len(pd)):
        for s in range(4):
            e = pd[k][s]
            if e in done or heads[e] != (k, s):
                continue
            n = e
            while True:
                order.append(n)
                done.add(n)
                kk, ss = heads[n]
                n = pd[kk][_through(ss, signs[kk])]
                if n == e:
                    break
    new = {e: i for i, e in enumerate(order)}
    return (tuple(tuple(new[e] for e in row) for row in pd), tuple(signs))


def _flip(row, sign):
    a, b, c, d = row
    return ((d, a, b, c), -1) if sign > 0 else ((b, c, d, a), 1)


def _smooth(pd, signs, x):
    row, sg = pd[x], signs[x]
    j1 = (row[0], row[over_out(sg)])
    j2 = (row[over_in(sg)], row[2])
    rest = [list(r) for k, r in enumerate(pd) if k != x]
    rs = [s for k, s in enumerate(signs) if k != x]
    loops = 0
    ren = {}

    def find(e):
        while e in ren:
            e = ren[e]
        return e
    for a, b in (j1, j2):
        a, b = find(a), find(b)
        if a == b:
            loops += 1          # the joined arc closed up without crossings
        else:
            ren[b] = a
    for r in rest:
        for i in range(4):
            r[i] = find(r[i])
    used = {e for r in rest for e in r}
    # a closed arc can also consist only of the two joined labels
    return rest, rs, loops, used


class _Engine:
    def __init__(self, budget):
        self.budget = budget
        self.memo: dict = {}

    def link(self, pd, signs, loops) -> Poly:
        pieces, loops = _canon(pd, signs, loops)
        out = ppow(LOOP, loops + len(pieces) - 1) if (loops + len(pieces)) > 1 else ONE
        for piece in pieces:
            out = pmul(out, self.piece(*piece))
        return out

    def piece(self, pd, signs) -> Poly:
        key = (pd, signs)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        val = self._descend(list(pd), list(signs))
        self.memo[key] = val
        return val

    def _descend(self, pd, signs) -> Poly:
        """pd is connected, labels fixed for the whole switching chain."""
        acc: Poly = {}
        coef = ONE
        while True:
            x = _first_bad(pd, signs)
            if x is None:
                comps = _component_count(pd, signs)
                return padd(acc, pmul(coef, ppow(LOOP, comps - 1)))
            sg = signs[x]
            rest, rs, extra, _ = _smooth(pd, signs, x)
            p0 = self.link(rest, rs, extra)
            if sg > 0:
                # P = v^2 P(L-) + v z P(L0)
                acc = padd(acc, pmul(coef, p0), 1, 1, 1)
                coef = {(a + 2, b): c for (a, b), c in coef.items()}
            else:
                acc = padd(acc, pmul(coef, p0), -1, -1, 1)
                coef = {(a - 2, b): c for (a, b), c in coef.items()}
            pd[x], signs[x] = _flip(pd[x], sg)


def _walk(pd, signs):
    heads, tails = _slots(pd, signs)
    left = set(heads)
    while left:
        e0 = min(left)
        e = e0
        while True:
            left.discard(e)
            k, s = heads[e]
            yield e, k, s
            e = pd[k][_through(s, signs[k])]
            if e == e0:
                break


def _first_bad(pd, signs):
    seen = set()
    for _, k, s in _walk(pd, signs):
        if k in seen:
            continue
        seen.add(k)
        if s == 0:          # first visit on the under strand
            return k
    return None


def _component_count(pd, signs):
    heads, _ = _slots(pd, signs)
    left = set(heads)
    n = 0
    while left:
        e0 = min(left)
        e = e0
        n += 1
        while True:
            left.discard(e)
            k, s = heads[e]
            e = pd[k][_through(s, signs[k])]
            if e == e0:
                break
    return n


def homfly(D: LinkDiagram, budget: int = DEFAULT_BUDGET) -> Poly:
    if len(D.pd) > budget:
        raise BudgetExceeded(f"{len(D.pd)} crossings exceed the skein budget {budget}")
    return _Engine(budget).link(D.pd, D.signs, D.loops)


def delta_degree(P: Poly) -> int:
    return max(b for _, b in P)


def morton_genus_lower(P: Poly) -> int:
    return delta_degree(P) // 2


def v_breadth(P: Poly) -> int:
    vs = [a for a, _ in P]
    return max(vs) - min(vs)


def mfw_braid_lower(P: Poly) -> int:
    return v_breadth(P) // 2 + 1


def rasmussen_positive(D: Diagram) -> int:
    if not D.is_positive():
        raise ValueError("diagram has a negative crossing")
    if not D.pd:
        return 0
    return len(D.pd) - seifert(D).circle_count + 1


def rasmussen_alternating(D: Diagram) -> int:
    from .seifert import signature
    if D.pd and not (D.is_alternating() and D.is_reduced()):
        raise ValueError("needs a reduced alternating diagram")
    return -signature(D) if D.pd else 0
