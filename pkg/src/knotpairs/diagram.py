"""Oriented planar diagrams stored as PD codes with explicit crossing signs.

Convention: a crossing is ``X[a,b,c,d]`` with ``a`` the incoming under-edge and
the four slots listed counterclockwise, so the under-strand runs a -> c.  The
over-strand runs d -> b on a positive crossing and b -> d on a negative one.
With edges numbered along the orientation this is the familiar rule
"positive iff b == d + 1", but the sign is stored explicitly so that one- and
two-edge diagrams stay unambiguous.

Slots are addressed as ``(crossing, position)`` with positions 0..3 in the
order above.  Corner ``(k, i)`` is the angular sector between slots ``i`` and
``i+1`` of crossing ``k``; faces are orbits of corners.
"""
from __future__ import annotations

import json
from functools import cached_property
from typing import Iterable, Sequence

PD = tuple[tuple[int, int, int, int], ...]


class DiagramError(ValueError):
    pass


def over_in(sign: int) -> int:
    return 3 if sign > 0 else 1


def over_out(sign: int) -> int:
    return 1 if sign > 0 else 3


def _is_in(slot: int, sign: int) -> bool:
    return slot == 0 or slot == over_in(sign)


def _through(slot: int, sign: int) -> int:
    """Out-slot reached by passing straight through the crossing from an in-slot."""
    if slot == 0:
        return 2
    return over_out(sign)


def _seifert_turn(slot: int, sign: int) -> int:
    """Out-slot reached from an in-slot after the oriented smoothing."""
    if slot == 0:
        return over_out(sign)
    return 2


class LinkDiagram:
    """Oriented link diagram; ``loops`` counts crossingless trivial circles."""

    def __init__(self, pd: Iterable[Sequence[int]], signs: Iterable[int], loops: int = 0,
                 check: bool = True):
        self.pd: PD = tuple(tuple(int(v) for v in x) for x in pd)  # type: ignore[misc]
        self.signs: tuple[int, ...] = tuple(1 if s > 0 else -1 for s in signs)
        self.loops = int(loops)
        if check:
            self._validate()

    # -- structure --------------------------------------------------------
    def _validate(self):
        if len(self.pd) != len(self.signs):
            raise DiagramError("one sign per crossing required")
        seen: dict[int, list[tuple[int, int]]] = {}
        for k, x in enumerate(self.pd):
            if len(x) != 4:
                raise DiagramError(f"crossing {k} does not have 4 slots")
            for s, e in enumerate(x):
                seen.setdefault(e, []).append((k, s))
        for e, occ in seen.items():
            if len(occ) != 2:
                raise DiagramError(f"edge {e} appears {len(occ)} times")
            ins = [_is_in(s, self.signs[k]) for k, s in occ]
            if sorted(ins) != [False, True]:
                raise DiagramError(f"edge {e} is not oriented consistently")

    @cached_property
    def _slots(self) -> dict[int, tuple[tuple[int, int], tuple[int, int]]]:
        """edge -> (tail slot, head slot)."""
        tmp: dict[int, list] = {}
        for k, x in enumerate(self.pd):
            for s, e in enumerate(x):
                tmp.setdefault(e, [None, None])
                if _is_in(s, self.signs[k]):
                    tmp[e][1] = (k, s)
                else:
                    tmp[e][0] = (k, s)
        return {e: (v[0], v[1]) for e, v in tmp.items()}

    def tail(self, e: int) -> tuple[int, int]:
        return self._slots[e][0]

    def head(self, e: int) -> tuple[int, int]:
        return self._slots[e][1]

    def edges(self) -> list[int]:
        return sorted(self._slots)

    def partner(self, k: int, s: int) -> tuple[int, int]:
        e = self.pd[k][s]
        t, h = self._slots[e]
        return h if t == (k, s) else t

    def next_edge(self, e: int) -> int:
        k, s = self.head(e)
        return self.pd[k][_through(s, self.signs[k])]

    def seifert_next(self, e: int) -> int:
        k, s = self.head(e)
        return self.pd[k][_seifert_turn(s, self.signs[k])]

    def crossing_count(self) -> int:
        return len(self.pd)

    def writhe(self) -> int:
        return sum(self.signs)

    @cached_property
    def components(self) -> list[list[int]]:
        """Edge cycles of the crossed components, each in orientation order."""
        left = set(self._slots)
        out = []
        while left:
            e0 = min(left)
            cyc = [e0]
            e = self.next_edge(e0)
            while e != e0:
                cyc.append(e)
                e = self.next_edge(e)
            left.difference_update(cyc)
            out.append(cyc)
        return out

    def component_count(self) -> int:
        return len(self.components) + self.loops

    # -- faces ------------------------------------------------------------
    @cached_property
    def faces(self) -> list[list[tuple[int, int]]]:
        seen = set()
        out = []
        for k in range(len(self.pd)):
            for i in range(4):
                if (k, i) in seen:
                    continue
                face = []
                cur = (k, i)
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    cur = self.partner(cur[0], (cur[1] + 1) % 4)
                out.append(face)
        return out

    @cached_property
    def face_of(self) -> dict[tuple[int, int], int]:
        return {c: f for f, face in enumerate(self.faces) for c in face}

    def euler_ok(self) -> bool:
        """V - E + F = 2 on every connected piece (faces are counted per piece)."""
        c = len(self.pd)
        if c == 0:
            return True
        return c - 2 * c + len(self.faces) == 2 * self._pieces()

    def _pieces(self) -> int:
        parent = list(range(len(self.pd)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a
        for e, (t, h) in self._slots.items():
            parent[find(t[0])] = find(h[0])
        return len({find(k) for k in range(len(self.pd))})

    # -- moves --------------------------------------------------------------
    def mirror(self) -> "LinkDiagram":
        return self._flip(range(len(self.pd)))

    def crossing_change(self, x: int) -> "LinkDiagram":
        self._check_crossing(x)
        return self._flip([x])

    def _flip(self, which) -> "LinkDiagram":
        which = set(which)
        pd, signs = [], []
        for k, (a, b, c, d) in enumerate(self.pd):
            if k in which:
                if self.signs[k] > 0:
                    pd.append((d, a, b, c))
                else:
                    pd.append((b, c, d, a))
                signs.append(-self.signs[k])
            else:
                pd.append((a, b, c, d))
                signs.append(self.signs[k])
        return type(self)._make(pd, signs, self.loops)

    @classmethod
    def _make(cls, pd, signs, loops):
        return cls(pd, signs, loops)

    def _check_crossing(self, x: int):
        if not (0 <= x < len(self.pd)):
            raise DiagramError(f"unknown crossing id {x}")

    def smooth_oriented(self, x: int) -> "LinkDiagram":
        """Oriented resolution at ``x``; the result is a general link diagram."""
        self._check_crossing(x)
        sg = self.signs[x]
        row = self.pd[x]
        joins = [(row[0], row[over_out(sg)]), (row[over_in(sg)], row[2])]
        pd = [r for k, r in enumerate(self.pd) if k != x]
        signs = [s for k, s in enumerate(self.signs) if k != x]
        return relabel(pd, signs, self.loops, joins)

    def remove_crossings(self, xs: Sequence[int], joins) -> "LinkDiagram":
        xs = set(xs)
        pd = [r for k, r in enumerate(self.pd) if k not in xs]
        signs = [s for k, s in enumerate(self.signs) if k not in xs]
        return relabel(pd, signs, self.loops, joins)

    # -- output -----------------------------------------------------------
    def pd_text(self) -> str:
        return "\n".join(
            f"X[{a},{b},{c},{d}]{'+' if s > 0 else '-'}"
            for (a, b, c, d), s in zip(self.pd, self.signs)
        )

    def to_json(self) -> str:
        edges = []
        for e in self.edges():
            t, h = self._slots[e]
            edges.append([e, list(t), list(h)])
        return json.dumps({"crossings": [list(x) for x in self.pd],
                           "signs": list(self.signs),
                           "edges": edges,
                           "loops": self.loops}, separators=(",", ":"))

    def __eq__(self, other):
        return (isinstance(other, LinkDiagram) and self.pd == other.pd
                and self.signs == other.signs and self.loops == other.loops)

    def __hash__(self):
        return hash((self.pd, self.signs, self.loops))

    def __repr__(self):
        return f"{type(self).__name__}(c={len(self.pd)}, pd={list(self.pd)}, signs={list(self.signs)})"


def relabel(pd, signs, loops=0, joins=()) -> LinkDiagram:
    """Rebuild a diagram after identifying edge labels in ``joins``.

    Labels become consecutive along each component in orientation order.  A
    joined class that no longer touches any crossing turns into a free loop.
    """
    parent: dict[int, int] = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a
    for a, b in joins:
        parent[find(a)] = find(b)
    used = {find(e) for row in pd for e in row}
    classes = {find(e) for pair in joins for e in pair}
    loops += len(classes - used)
    pd = [tuple(find(e) for e in row) for row in pd]
    raw = LinkDiagram(pd, signs, 0, check=True)
    return _sequential(raw, loops)


def _sequential(raw: LinkDiagram, loops: int) -> LinkDiagram:
    # components ordered by the first crossing they visit, starting on the
    # edge entering that crossing at the smallest slot
    order: list[int] = []
    done = set()
    for k in range(len(raw.pd)):
        for s in range(4):
            e = raw.pd[k][s]
            if e in done or raw.head(e) != (k, s):
                continue
            cyc = [e]
            n = raw.next_edge(e)
            while n != e:
                cyc.append(n)
                n = raw.next_edge(n)
            done.update(cyc)
            order.extend(cyc)
    new = {e: i for i, e in enumerate(order)}
    pd = [tuple(new[e] for e in row) for row in raw.pd]
    return LinkDiagram(pd, raw.signs, loops, check=False)


class Diagram(LinkDiagram):
    """A knot diagram: exactly one component.  ``Diagram.unknot()`` is the round circle."""

    def __init__(self, pd, signs, loops: int | None = None, check: bool = True):
        pd = tuple(tuple(x) for x in pd)
        if loops is None:
            loops = 0 if pd else 1
        super().__init__(pd, signs, loops, check)
        if check and self.component_count() != 1:
            raise DiagramError("a knot diagram needs exactly one component")
        if check and pd and not self.euler_ok():
            raise DiagramError("PD code fails the planarity (Euler) check")

    @classmethod
    def _make(cls, pd, signs, loops):
        return cls(pd, signs, loops)

    @classmethod
    def unknot(cls) -> "Diagram":
        return cls((), ())

    @classmethod
    def from_link(cls, L: LinkDiagram) -> "Diagram":
        return cls(L.pd, L.signs, L.loops)

    @cached_property
    def gauss(self) -> list[tuple[int, str, int]]:
        """Signed Gauss code starting at the smallest edge label."""
        if not self.pd:
            return []
        out = []
        e = min(self._slots)
        for _ in range(2 * len(self.pd)):
            k, s = self.head(e)
            out.append((k, "U" if s == 0 else "O", self.signs[k]))
            e = self.next_edge(e)
        return out

    def gauss_text(self) -> str:
        return " ".join(f"{'+' if s > 0 else '-'}{ou}{k}" for k, ou, s in self.gauss)

    def _arcs(self, x: int) -> tuple[list[int], list[int]]:
        g = [k for k, _, _ in self.gauss]
        i, j = [n for n, k in enumerate(g) if k == x]
        return g[i + 1:j], g[j + 1:] + g[:i]

    def is_alternating(self) -> bool:
        g = self.gauss
        return all(g[i][1] != g[(i + 1) % len(g)][1] for i in range(len(g)))

    def nugatory(self, x: int) -> bool:
        """True iff no other chord of the Gauss diagram is interlaced with ``x``."""
        self._check_crossing(x)
        a, _ = self._arcs(x)
        return all(a.count(k) != 1 for k in set(a))

    def is_reduced(self) -> bool:
        return not any(self.nugatory(x) for x in range(len(self.pd)))

    def is_outermost(self, x: int) -> bool:
        """One side of the Gauss code between the two visits of ``x`` has no
        repeated crossing, so one of the smoothed curves is simple."""
        self._check_crossing(x)
        a, b = self._arcs(x)
        return len(set(a)) == len(a) or len(set(b)) == len(b)

    def is_positive(self) -> bool:
        return all(s > 0 for s in self.signs)


def connected_sum_diagram(D1: Diagram, D2: Diagram) -> Diagram:
    """Band join of the smallest-label edge of D1 with an edge of D2.

    The D2 edge is the first one ending at the same role (over/under) as the
    D1 edge, so the sum of two alternating diagrams is alternating.
    """
    if not D1.pd:
        return D2
    if not D2.pd:
        return D1
    off = 1 + max(D1.edges())
    pd2 = [tuple(e + off for e in row) for row in D2.pd]
    pd = [list(r) for r in D1.pd] + [list(r) for r in pd2]
    e1 = min(D1.edges())
    role = D1.head(e1)[1] == 0
    e2 = next((e for e in sorted(D2.edges()) if (D2.head(e)[1] == 0) == role),
              min(D2.edges())) + off
    h1 = D1.head(e1)
    k2, s2 = D2.head(e2 - off)
    h2 = (k2 + len(D1.pd), s2)
    pd[h2[0]][h2[1]] = e1
    pd[h1[0]][h1[1]] = e2
    raw = LinkDiagram(pd, D1.signs + D2.signs)
    L = _sequential(raw, 0)
    return Diagram(L.pd, L.signs)


def from_pd(pd, signs=None) -> Diagram:
    """Knot diagram from a PD code.  Without signs, labels must run 0..2c-1
    along the orientation and the ``b == d + 1`` rule decides each sign."""
    pd = [tuple(x) for x in pd]
    if signs is None:
        n = 2 * len(pd)
        signs = []
        for a, b, c, d in pd:
            if n > 2 and (b - d) % n == 1:
                signs.append(1)
            elif n > 2 and (d - b) % n == 1:
                signs.append(-1)
            else:
                raise DiagramError("sign is ambiguous; pass signs explicitly")
    return Diagram(pd, signs)


def parse_pd_text(text: str) -> Diagram:
    """Inverse of ``pd_text``: lines like ``X[0,3,1,4]+``."""
    pd, signs = [], []
    for line in text.replace(";", "\n").splitlines():
        line = line.strip()
        if not line:
            continue
        if not (line.startswith("X[") and "]" in line):
            raise DiagramError(f"bad PD line {line!r}")
        body, tail = line[2:].split("]", 1)
        try:
            row = tuple(int(v) for v in body.split(","))
        except ValueError:
            raise DiagramError(f"bad PD line {line!r}") from None
        if len(row) != 4:
            raise DiagramError(f"crossing {len(pd)} does not have 4 slots")
        pd.append(row)
        tail = tail.strip()
        signs.append(-1 if tail == "-" else 1 if tail == "+" else 0)
    if any(s == 0 for s in signs):
        if all(s == 0 for s in signs):
            return from_pd(pd)
        raise DiagramError("either all or no crossings carry a sign")
    return Diagram(pd, signs)


def diagram_from_json(text: str) -> Diagram:
    obj = json.loads(text)
    return Diagram(obj["crossings"], obj["signs"], obj.get("loops"))
