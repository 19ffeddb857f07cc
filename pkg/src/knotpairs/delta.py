"""Delta-move bookkeeping for a single crossing change, and the resulting
bounds on the delta-unknotting number.

A crossing change at x is traded for delta moves by sliding the two feet of
a clasp band along the arc alpha between the two visits of x.  Each
under-crossing passed costs one delta move, and the clasp left over is a
twist knot whose type is read off a linking number l(i,i).  Only this
ledger is modelled here: which crossings lie on alpha, their roles and signs,
and how the difference table d evolves as the meeting point i moves.

Indices j = 1..m refer to the crossing endpoints p_j met along alpha, in
order from the over-visit of x (after the change) to its under-visit.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .diagram import Diagram, DiagramError, LinkDiagram
from .seifert import a2


@dataclass(frozen=True)
class CrossingClassification:
    base: int
    c: int
    side: str                     # "first" or "second" Gauss arc
    m: int
    points: tuple                 # (crossing, role 'O'/'U', pn) for p_1..p_m
    O: frozenset
    U: frozenset
    P: frozenset
    N: frozenset
    S: frozenset
    M: frozenset
    partner: dict                 # j -> k for self crossings on alpha
    roles_swapped: bool
    outermost: bool

    def pn(self, j: int) -> int:
        return self.points[j - 1][2]


def classify(D: Diagram, x: int) -> CrossingClassification:
    if not 0 <= x < len(D.pd):
        raise DiagramError(f"no crossing {x}")
    g = D.gauss
    i, j = [n for n, (k, _, _) in enumerate(g) if k == x]
    first = g[i + 1:j]
    second = g[j + 1:] + g[:i]
    # after the change the old under-visit of x is its over-visit x0+;
    # alpha is oriented from x0+ to x0-
    if g[i][1] != "U":
        first = first[::-1]
    if g[j][1] != "U":
        second = second[::-1]
    side, alpha = ("first", first) if len(first) <= len(second) else ("second", second)
    m = len(alpha)
    ks = [k for k, _, _ in alpha]
    O = {n + 1 for n, (_, r, _) in enumerate(alpha) if r == "O"}
    U = set(range(1, m + 1)) - O
    swapped = len(U) > len(O)
    if swapped:
        O, U = U, O
        alpha = [(k, "U" if r == "O" else "O", s) for k, r, s in alpha]
    partner = {}
    for a in range(m):
        for b in range(m):
            if a != b and ks[a] == ks[b]:
                partner[a + 1] = b + 1
    S = frozenset(partner)
    return CrossingClassification(
        base=x, c=len(D.pd), side=side, m=m, points=tuple(alpha),
        O=frozenset(O), U=frozenset(U),
        P=frozenset(n + 1 for n, (_, _, s) in enumerate(alpha) if s > 0),
        N=frozenset(n + 1 for n, (_, _, s) in enumerate(alpha) if s < 0),
        S=S, M=frozenset(range(1, m + 1)) - S, partner=partner,
        roles_swapped=swapped, outermost=D.is_outermost(x))


def rho(i: int, m: int, j: int) -> int:
    return j if j <= i else i + 1 + m - j


@dataclass(frozen=True)
class LinkingProfile:
    l_values: tuple               # l(i,i) for i = 0..m
    l0m: int                      # l(0,m), from the mutual under-crossings
    d: tuple                      # d[i][t-1] = d_{i,t}
    eps: dict

    @property
    def lk1(self) -> bool:
        return self.l_values[0] == -self.l_values[-1]

    @property
    def lk2(self) -> bool:
        v = self.l_values
        return all(v[i + 1] - v[i] in (-2, 0, 2) for i in range(len(v) - 1))

    @property
    def lk3(self) -> bool:
        return all(v == 0 for v in self.l_values)

    def meeting_index(self) -> int:
        """First i with l(i,i) in {0, 1}; it exists by lk1 and lk2."""
        for i, v in enumerate(self.l_values):
            if v in (0, 1):
                return i
        raise AssertionError("no l(i,i) in {0,1}; the ledger is inconsistent")


def default_eps(cl: CrossingClassification) -> dict:
    return {j: -cl.pn(j) for j in sorted(cl.U & cl.S)}


def linking_profile(cl: CrossingClassification, eps: dict | None = None) -> LinkingProfile:
    m = cl.m
    us = sorted(cl.U & cl.S)
    um = sorted(cl.U & cl.M)
    if eps is None:
        eps = default_eps(cl)
    if set(eps) != set(us) or any(v not in (1, -1) for v in eps.values()):
        raise ValueError("eps must assign +-1 to every self under-crossing on alpha")
    cur = dict(eps)               # j -> d_{i, rho_i(j)} for the current i
    rows, ls = [], []
    l0m = sum(cl.pn(j) for j in um)
    for i in range(m + 1):
        row = [0] * m
        for j in um:
            row[rho(i, m, j) - 1] = -cl.pn(j)
        for j in us:
            row[rho(i, m, j) - 1] = cur[j]
        rows.append(tuple(row))
        l_full = l0m + sum(row)
        l_self = sum(cur[j] for j in us)
        assert l_full == l_self, "mutual under-crossings must cancel l(0,m)"
        ls.append(l_self)
        if i == m:
            break
        s = i + 1
        for j in us:
            k = cl.partner[j]
            if (j == s and k > j) or (k == s and j > s):
                cur[j] = -cur[j]
    return LinkingProfile(tuple(ls), l0m, tuple(rows), dict(eps))


def all_eps(cl: CrossingClassification):
    us = sorted(cl.U & cl.S)
    for signs in itertools.product((1, -1), repeat=len(us)):
        yield dict(zip(us, signs))


def ledger_moves(cl: CrossingClassification, prof: LinkingProfile) -> int:
    """Delta moves used by the ledger: one per under-crossing passed, plus one
    when the leftover clasp is a trefoil rather than trivial."""
    i = prof.meeting_index()
    return len(cl.U) + (0 if prof.l_values[i] == 0 else 1)


def delta_bound_crossing_change(D: Diagram, x: int) -> int:
    c = len(D.pd)
    if not 0 <= x < c:
        raise DiagramError(f"no crossing {x}")
    return (c - 1) // 2 if D.is_outermost(x) else (c + 1) // 2


def unknotting_diagram_bound(D: Diagram, not_torus_2p: bool = False):
    """Best bound on u(D) among the three cited ones, with its tag."""
    c = len(D.pd)
    if c == 0:
        raise ValueError("needs a diagram with crossings")
    cands = [(Fraction(c - 1, 2), "u(D) <= (c-1)/2")]
    if not_torus_2p:
        cands.append((Fraction(c - 2, 2), "u(D) <= (c-2)/2 for K not T(2,p)"))
    if any(not D.is_outermost(x) for x in range(c)):
        cands.append((Fraction(c - 3, 2), "u(D) <= (c-3)/2: a crossing is not outermost"))
    return min(cands, key=lambda t: t[0])


def delta_unknotting_upper(c: int) -> int:
    if c < 4:
        raise ValueError("the quadratic bound is stated for c >= 4")
    return (c * c - 2 * c - 3) // 4


def delta_unknotting_lower_a2(D: Diagram) -> int:
    return abs(a2(D))


def delta_torus(p: int) -> int:
    if p % 2 == 0:
        raise ValueError("T(2,p) is a knot only for odd p")
    return (p * p - 1) // 8


def bound_chain(D: Diagram, not_torus_2p: bool = False) -> list[str]:
    """Human-readable justification of the delta-unknotting bound of a
    minimal diagram D."""
    c = len(D.pd)
    lines = [f"c(D) = {c}"]
    if c < 4:
        lines.append("c < 4: the quadratic bound is not stated")
        return lines
    ub, tag = unknotting_diagram_bound(D, not_torus_2p)
    per = max(delta_bound_crossing_change(D, x) for x in range(c))
    lines.append(f"{tag}: u(D) <= {ub}")
    lines.append(f"each crossing change costs at most {per} delta moves "
                 "(floor((c-1)/2) at outermost crossings, floor((c+1)/2) otherwise)")
    lines.append(f"u_delta <= floor((c^2-2c-3)/4) = {delta_unknotting_upper(c)}")
    lines.append(f"u_delta >= |a2| = {delta_unknotting_lower_a2(D)}")
    return lines


# -- exhaustive corpus of small diagrams ---------------------------------------------

def _matchings(n):
    """Gauss words with letters in first-occurrence order (length 2n)."""
    def rec(word, nxt, open_):
        if len(word) == 2 * n:
            yield tuple(word)
            return
        if nxt < n and len(word) + len(open_) + 2 <= 2 * n:
            yield from rec(word + [nxt], nxt + 1, open_ | {nxt})
        for a in sorted(open_):
            yield from rec(word + [a], nxt, open_ - {a})
    yield from rec([], 0, frozenset())


def _canonical(word):
    best = None
    L = len(word)
    for r in range(L):
        w = word[r:] + word[:r]
        ren = {}
        out = tuple(ren.setdefault(a, len(ren)) for a in w)
        if best is None or out < best:
            best = out
    return best


def _pd_from_word(word, under_first, signs):
    """PD code for visits 0..2n-1; edge t leaves visit t."""
    L = len(word)
    visits = {}
    for t, a in enumerate(word):
        visits.setdefault(a, []).append(t)
    pd, sg = [], []
    for a in range(len(visits)):
        t1, t2 = visits[a]
        if not under_first[a]:
            t1, t2 = t2, t1
        s = signs[a]
        b, d = ((t2, (t2 - 1) % L) if s > 0 else ((t2 - 1) % L, t2))
        pd.append(((t1 - 1) % L, b, t1, d))
        sg.append(s)
    return pd, sg


def realizable_diagrams(n: int):
    """Every planar knot diagram with n crossings, as a set of signed Gauss
    codes: each planar curve (up to cyclic relabelling) with all 2^n
    over/under choices."""
    words = sorted({_canonical(w) for w in _matchings(n)})
    for w in words:
        for rot in itertools.product((1, -1), repeat=n - 1):
            signs = (1,) + rot            # the sphere reflection fixes crossing 0
            pd, sg = _pd_from_word(w, [True] * n, signs)
            L = LinkDiagram(pd, sg, check=False)
            if not L.euler_ok():
                continue
            for flips in itertools.product((False, True), repeat=n):
                uf = [not f for f in flips]
                s2 = [-s if f else s for s, f in zip(signs, flips)]
                pd2, sg2 = _pd_from_word(w, uf, s2)
                yield Diagram(pd2, sg2)
