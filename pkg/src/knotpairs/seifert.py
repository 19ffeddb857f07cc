"""Seifert's algorithm on a diagram and the invariants of the canonical surface.

Surface model used for the Seifert form.  Every Seifert circle bounds a disk
("dome") lying above the projection plane, nested domes stacked so that an
outer dome sits higher than the domes inside it; each crossing contributes a
half-twisted band near the plane.  A basis curve runs along bands and crosses
each dome it visits on a chord.  Projection crossings between a curve ``a``
and the push-off ``b+`` then only occur

* where two chords on one dome interleave (``b+`` on top iff the dome's
  normal points up, i.e. its circle runs counterclockwise);
* where a chord passes over the part of the other curve hidden under its
  dome; only the algebraic count matters and it is read off from the
  endpoints on the circle;
* inside a band used by both curves (the half twist).

``lk(a, b+)`` is counted once from the crossings with ``a`` on top and once
from those with ``b+`` on top; the two counts must agree and this is
asserted.  The same matrix comes out whichever face is taken as the outer
face, which the tests also check.

In the local picture of a crossing both strands point north, the arc of the
smoothing on the left is ``L`` and the one on the right is ``R``; a band
track at height ``u`` on the ``L`` side arrives at height ``-u`` on ``R``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .diagram import Diagram, LinkDiagram, over_in, over_out


@dataclass(frozen=True)
class SeifertData:
    circle_count: int
    circles: tuple                       # edge cycles
    circle_of_edge: dict
    graph_edges: tuple                   # crossing -> (L circle, R circle)
    degree_counts: dict
    euler_characteristic: int
    canonical_genus: int
    seifert_matrix: tuple = field(repr=False)


def _arcs(D: LinkDiagram, x: int) -> tuple[int, int]:
    """Outgoing edges of the L and R arcs of the smoothing at ``x``."""
    row = D.pd[x]
    if D.signs[x] > 0:
        return row[2], row[over_out(1)]
    return row[over_out(-1)], row[2]


class _Surface:
    def __init__(self, D: LinkDiagram, root_face: int = 0):
        self.D = D
        c = len(D.pd)
        # circles
        seen = {}
        circles = []
        for e in D.edges():
            if e in seen:
                continue
            cyc = [e]
            seen[e] = len(circles)
            n = D.seifert_next(e)
            while n != e:
                cyc.append(n)
                seen[n] = len(circles)
                n = D.seifert_next(n)
            circles.append(cyc)
        self.circles = circles
        self.circle_of = seen
        self.index_in = {}
        for ci, cyc in enumerate(circles):
            for j, e in enumerate(cyc):
                self.index_in[e] = j
        self.L, self.R = {}, {}
        self.posL, self.posR = {}, {}
        for x in range(c):
            eL, eR = _arcs(D, x)
            self.L[x], self.R[x] = seen[eL], seen[eR]
            self.posL[x], self.posR[x] = self.index_in[eL], self.index_in[eR]
        if c:
            self._regions(root_face)

    # -- planar nesting -----------------------------------------------------
    def _regions(self, root_face):
        D = self.D
        nf = len(D.faces)
        parent = list(range(nf))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a
        band_corner = {}
        for x in range(len(D.pd)):
            if D.signs[x] > 0:
                a, b = (x, 3), (x, 1)
            else:
                a, b = (x, 0), (x, 2)
            fa, fb = D.face_of[a], D.face_of[b]
            parent[find(fa)] = find(fb)
            band_corner[x] = a
        reg = {f: find(f) for f in range(nf)}
        left, right = [], []
        for cyc in self.circles:
            e = cyc[0]
            k, s = D.head(e)
            left.append(reg[D.face_of[(k, (s - 1) % 4)]])
            right.append(reg[D.face_of[(k, s)]])
        # region/circle tree rooted at the root face's region
        adj: dict = {}
        for ci in range(len(self.circles)):
            if left[ci] == right[ci]:
                raise ValueError("Seifert circle with the same region on both sides")
            adj.setdefault(("r", left[ci]), []).append(("c", ci))
            adj.setdefault(("r", right[ci]), []).append(("c", ci))
            adj[("c", ci)] = [("r", left[ci]), ("r", right[ci])]
        root = ("r", reg[root_face])
        outside = {}
        depth = {}
        q = deque([root])
        seen = {root}
        rdepth = {root: 0}
        while q:
            node = q.popleft()
            for nb in adj.get(node, []):
                if nb in seen:
                    continue
                seen.add(nb)
                if nb[0] == "c":
                    outside[nb[1]] = node[1]
                    depth[nb[1]] = rdepth[node]
                else:
                    rdepth[nb] = depth[node[1]] + 1
                q.append(nb)
        self.inside = {}
        self.ccw = {}
        for ci in range(len(self.circles)):
            ins = right[ci] if outside[ci] == left[ci] else left[ci]
            self.inside[ci] = ins
            self.ccw[ci] = left[ci] == ins
        self.band_region = {x: reg[D.face_of[band_corner[x]]] for x in band_corner}

    def child_band(self, x, ci) -> bool:
        return self.band_region[x] == self.inside[ci]

    # -- homology basis -----------------------------------------------------
    def cycles(self):
        s = len(self.circles)
        adj = {i: [] for i in range(s)}
        for x in range(len(self.D.pd)):
            adj[self.L[x]].append((x, self.R[x]))
            adj[self.R[x]].append((x, self.L[x]))
        par = {0: None}
        order = deque([0])
        tree = set()
        while order:
            v = order.popleft()
            for x, w in sorted(adj[v]):
                if w not in par:
                    par[w] = (v, x)
                    tree.add(x)
                    order.append(w)
        if len(par) != s:
            raise ValueError("Seifert graph is disconnected (split diagram)")

        def path_to_root(v):
            out = []
            while par[v] is not None:
                u, x = par[v]
                out.append((x, v, u))
                v = u
            return out
        cyc = []
        for x in range(len(self.D.pd)):
            if x in tree:
                continue
            a, b = self.L[x], self.R[x]
            # a -> b via x, then tree path b -> a
            pb = path_to_root(b)
            pa = path_to_root(a)
            # strip common tail
            while pa and pb and pa[-1] == pb[-1]:
                pa.pop()
                pb.pop()
            steps = [(x, a, b)] + pb + [(y, v, u) for (y, u, v) in reversed(pa)]
            cyc.append(steps)
        return cyc

    # -- linking numbers ------------------------------------------------------
    def _key(self, x, ci, u):
        if self.L[x] == ci:
            k = (self.posL[x], u)
        else:
            k = (self.posR[x], -u)
        return k if self.ccw[ci] else (-k[0], -k[1])

    def _chords(self, steps, upos):
        """circle -> (planar entry key, planar exit key, entry band, exit band)."""
        out = {}
        n = len(steps)
        for i in range(n):
            x_in, _, c = steps[i]
            x_out, c2, _ = steps[(i + 1) % n]
            assert c == c2
            out[c] = (self._key(x_in, c, upos[x_in]), self._key(x_out, c, upos[x_out]),
                      x_in, x_out)
        return out

    def link(self, A, B, same: bool) -> int:
        dirA = {x: (1 if f == self.L[x] else -1) for x, f, _ in A}
        dirB = {x: (1 if f == self.L[x] else -1) for x, f, _ in B}
        shared = set(dirA) & set(dirB)
        if same:
            ua = {x: 0 for x in dirA}
            ub = {x: dirA[x] for x in dirB}
        else:
            ua = {x: (-1 if x in shared else 0) for x in dirA}
            ub = {x: (1 if x in shared else 0) for x in dirB}
        ca = self._chords(A, ua)
        cb = self._chords(B, ub)
        s_a = s_b = 0     # crossings with a on top / with b+ on top
        for ci in set(ca) & set(cb):
            pa, pb = ca[ci], cb[ci]
            cr = _cross(pa[0], pa[1], pb[0], pb[1])
            if self.ccw[ci]:
                s_b -= cr
            else:
                s_a += cr
            if self.child_band(pb[2], ci):
                assert self.child_band(pb[3], ci)
                s_a -= cr
            if self.child_band(pa[2], ci):
                assert self.child_band(pa[3], ci)
                s_b += cr
        for x in shared:
            a_over = (ua[x] < ub[x]) if self.D.signs[x] > 0 else (ua[x] > ub[x])
            if a_over:
                sg = dirA[x] * dirB[x] * (1 if ua[x] > ub[x] else -1)
                s_a += sg
            else:
                sg = dirA[x] * dirB[x] * (1 if ub[x] > ua[x] else -1)
                s_b += sg
        if s_a != s_b:
            raise AssertionError(f"linking count mismatch {s_a} != {s_b}")
        return s_a

    def matrix(self):
        cyc = self.cycles()
        n = len(cyc)
        return [[self.link(cyc[i], cyc[j], i == j) for j in range(n)] for i in range(n)]


def _in_arc(p1, p2, q) -> bool:
    if p1 < p2:
        return p1 < q < p2
    return q > p1 or q < p2


def _cross(p1, p2, q1, q2) -> int:
    """Sign of d_p x d_q for two chords of a counterclockwise disk, 0 if disjoint."""
    i1 = _in_arc(p1, p2, q1)
    i2 = _in_arc(p1, p2, q2)
    if i1 and not i2:
        return 1
    if i2 and not i1:
        return -1
    return 0


def seifert_matrix(D: LinkDiagram, root_face: int = 0) -> list:
    if not D.pd:
        return []
    return _Surface(D, root_face).matrix()


def seifert(D: Diagram) -> SeifertData:
    S = _Surface(D)
    s = len(S.circles) if D.pd else 1
    c = len(D.pd)
    deg: dict = {}
    for ci in range(len(S.circles)):
        d = sum(1 for x in range(c) if S.L[x] == ci) + sum(1 for x in range(c) if S.R[x] == ci)
        deg[d] = deg.get(d, 0) + 1
    chi = s - c
    V = S.matrix() if c else []
    return SeifertData(
        circle_count=s,
        circles=tuple(tuple(cy) for cy in S.circles),
        circle_of_edge=dict(S.circle_of),
        graph_edges=tuple((S.L[x], S.R[x]) for x in range(c)),
        degree_counts=dict(sorted(deg.items())),
        euler_characteristic=chi,
        canonical_genus=(1 - chi) // 2,
        seifert_matrix=tuple(tuple(r) for r in V),
    )


def _V(D: Diagram):
    return [list(r) for r in seifert(D).seifert_matrix]


def signature(D: Diagram) -> int:
    V = _V(D)
    n = len(V)
    return linalg.signature([[V[i][j] + V[j][i] for j in range(n)] for i in range(n)])


def alexander(D: Diagram) -> dict:
    """Symmetrised Alexander polynomial {exponent: coeff} with value 1 at t = 1."""
    conway = conway_polynomial(D)
    # substitute z = t^(1/2) - t^(-1/2); z^2 = t - 2 + 1/t
    out = {0: 0}
    out = {}
    power = {0: 1}
    for k in range(0, max(conway) + 1, 2):
        if k > 0:
            power = _laurent_mul(power, {1: 1, 0: -2, -1: 1})
        c = conway.get(k, 0)
        for e, v in power.items():
            out[e] = out.get(e, 0) + c * v
    return {e: v for e, v in sorted(out.items()) if v}


def _laurent_mul(p, q):
    out = {}
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return out


def conway_polynomial(D: Diagram) -> dict:
    """Conway polynomial {power of z: coeff}, from det(x V - x^-1 V^T)."""
    V = _V(D)
    n = len(V)
    delta = linalg.matpoly_det(V)          # det(t V - V^T)
    # D(x) = sum d_i x^(2i - n)
    dx = {2 * i - n: v for i, v in delta.items()}
    out = {}
    while dx:
        top = max(dx)
        if top < 0:
            raise ArithmeticError(f"leftover negative powers {dx}")
        c = dx[top]
        out[top] = c
        # subtract c (x - 1/x)^top
        for j in range(top + 1):
            e = top - 2 * j
            dx[e] = dx.get(e, 0) - c * _binom(top, j) * (-1) ** j
        dx = {e: v for e, v in dx.items() if v}
    if out.get(0) != 1:
        raise ArithmeticError(f"Conway polynomial has constant term {out.get(0)}")
    return dict(sorted(out.items()))


@lru_cache(maxsize=None)
def _binom(n, k):
    from math import comb
    return comb(n, k)


def a2(D: Diagram) -> int:
    return conway_polynomial(D).get(2, 0)


def determinant(D: Diagram) -> int:
    V = _V(D)
    n = len(V)
    return abs(linalg.det_int([[V[i][j] + V[j][i] for j in range(n)] for i in range(n)]))


def genus_alternating(D: Diagram) -> int:
    """g(K) = g_c(K) = g(F(D)) for a reduced alternating diagram (a theorem of
    Crowell and Murasugi; not re-proved here)."""
    if not (D.is_alternating() and D.is_reduced()):
        raise ValueError("needs a reduced alternating diagram")
    return seifert(D).canonical_genus


def seifert_graph_bound_check(D: Diagram) -> dict:
    """Degree census of the Seifert graph and the identity
    sum_{i>=3} (i-2) V_i = 4 g(F(D)) - 2 for reduced diagrams with g >= 1."""
    if not D.is_reduced():
        raise ValueError("diagram has a nugatory crossing (V_1 may be nonzero)")
    sd = seifert(D)
    if sd.canonical_genus < 1:
        raise ValueError("identity is stated for canonical genus >= 1")
    lhs = sum((i - 2) * v for i, v in sd.degree_counts.items() if i >= 3)
    rhs = 4 * sd.canonical_genus - 2
    return {"degree_counts": sd.degree_counts, "V1": sd.degree_counts.get(1, 0),
            "lhs": lhs, "rhs": rhs, "holds": lhs == rhs}
