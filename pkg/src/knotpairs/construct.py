"""Diagram construction from Morse-level descriptions.

A description is a list of levels read top to bottom over a row of strand
positions:

* ``("cap", k)``   two new strand ends at positions k, k+1 joined above;
* ``("cup", k)``   strands at positions k, k+1 joined below and removed;
* ``("x", k, t)``  strands at k, k+1 cross.  ``t = +1`` puts the strand
  running from top-right to bottom-left on top, ``t = -1`` the other one.
  So ``t`` is the crossing sign whenever both strands run downward.

Braid closures, 4-plats (2-bridge knots), pretzel diagrams and Whitehead
doubles are all emitted in this form and traced into a PD code.
"""
from __future__ import annotations

from .diagram import Diagram, DiagramError, LinkDiagram

# slot geometry at a crossing, y up (earlier levels are higher)
_VEC = {"TL": (-1, 1), "TR": (1, 1), "BL": (-1, -1), "BR": (1, -1)}
_CCW = ("BL", "BR", "TR", "TL")
_THRU = {"TL": "BR", "BR": "TL", "TR": "BL", "BL": "TR"}


def trace(levels, orient_down: bool = False) -> LinkDiagram:
    """Trace a Morse description into an oriented diagram.

    Each component is oriented from its first slot in crossing order; with
    ``orient_down`` a component whose first crossing strand runs upward is
    reversed (this is what a braid closure wants).
    """
    conn: dict = {}
    pos: list = []
    nwire = 0
    types: list[int] = []

    def link(a, b):
        conn[a] = b
        conn[b] = a

    for lev in levels:
        kind = lev[0]
        k = lev[1]
        if kind == "cap":
            if not 0 <= k <= len(pos):
                raise DiagramError(f"cap at {k} outside 0..{len(pos)}")
            w = nwire
            nwire += 1
            pos[k:k] = [("w", w, 0), ("w", w, 1)]
        elif kind == "cup":
            if not 0 <= k < len(pos) - 1:
                raise DiagramError(f"cup at {k} needs two strands")
            link(pos[k], pos[k + 1])
            del pos[k:k + 2]
        elif kind == "x":
            if not 0 <= k < len(pos) - 1:
                raise DiagramError(f"crossing at {k} needs two strands")
            n = len(types)
            types.append(1 if lev[2] > 0 else -1)
            link(pos[k], ("s", n, "TL"))
            link(pos[k + 1], ("s", n, "TR"))
            pos[k], pos[k + 1] = ("s", n, "BL"), ("s", n, "BR")
        else:
            raise DiagramError(f"unknown level {lev!r}")
    if pos:
        raise DiagramError("description leaves open strands")

    def walk(tok):
        # follow external links and wires until a crossing slot is reached
        steps = 0
        while True:
            tok = conn[tok]
            if tok[0] == "s":
                return tok
            tok = ("w", tok[1], 1 - tok[2])
            steps += 1
            if steps > 4 * nwire + 4:
                return None

    ncross = len(types)
    seen_slots = set()
    comps = []
    for n in range(ncross):
        for corner in ("TL", "TR", "BL", "BR"):
            if ("s", n, corner) in seen_slots:
                continue
            # start leaving crossing n through ``corner``
            start = ("s", n, corner)
            seq = []
            cur = start
            while True:
                seen_slots.add(cur)
                nxt = walk(cur)
                seen_slots.add(nxt)
                seq.append((cur, nxt))
                cur = ("s", nxt[1], _THRU[nxt[2]])
                if cur == start:
                    break
            comps.append(seq)
    # crossingless circles: wires never reached from a slot
    reach = set()
    for seq in comps:
        for a, _ in seq:
            t = a
            while True:
                t = conn[t]
                if t[0] == "s":
                    break
                reach.add(t[1])
                t = ("w", t[1], 1 - t[2])
    free_loops = 0
    pending = set(range(nwire)) - reach
    while pending:
        w = pending.pop()
        t = ("w", w, 0)
        while True:
            t = conn[t]
            pending.discard(t[1])
            t = ("w", t[1], 1 - t[2])
            if t[1] == w:
                break
        free_loops += 1

    if orient_down:
        # an edge leaving through a bottom corner runs downward
        comps = [seq if seq[0][0][2] in ("BL", "BR") else [(b, a) for a, b in reversed(seq)]
                 for seq in comps]

    # edge labels in orientation order; seq items are (out slot, in slot)
    label = {}
    e = 0
    for seq in comps:
        for out_tok, in_tok in seq:
            label[out_tok] = e
            label[in_tok] = e
            e += 1
    heads = {b for seq in comps for _, b in seq}
    pd, signs = [], []
    for n in range(ncross):
        ins = [c for c in ("TL", "TR", "BL", "BR") if ("s", n, c) in heads]
        over_is_slash = types[n] > 0       # '/' joins TR and BL
        strands = []
        for c in ins:
            out = _THRU[c]
            slash = c in ("TR", "BL")
            strands.append((c, out, slash))
        over = [s for s in strands if s[2] == over_is_slash][0]
        under = [s for s in strands if s[2] != over_is_slash][0]
        vo = _sub(_VEC[over[1]], _VEC[over[0]])
        vu = _sub(_VEC[under[1]], _VEC[under[0]])
        sign = 1 if vo[0] * vu[1] - vo[1] * vu[0] > 0 else -1
        start = _CCW.index(under[0])
        row = tuple(label[("s", n, _CCW[(start + i) % 4])] for i in range(4))
        pd.append(row)
        signs.append(sign)
    return LinkDiagram(pd, signs, free_loops)


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def knot(levels, orient_down: bool = False) -> Diagram:
    L = trace(levels, orient_down)
    return Diagram.from_link(L)


# -- families -----------------------------------------------------------------

def braid_levels(word, strands: int | None = None) -> list:
    """Closure of a braid word; generator ``i`` (1-based) crosses positions i-1, i."""
    word = [int(g) for g in word]
    n = strands if strands is not None else (max((abs(g) for g in word), default=0) + 1)
    if any(g == 0 or abs(g) >= n for g in word):
        raise DiagramError(f"braid word {word} does not fit on {n} strands")
    lev = [("cap", i) for i in range(n)]
    lev += [("x", abs(g) - 1, 1 if g > 0 else -1) for g in word]
    lev += [("cup", i) for i in reversed(range(n))]
    return lev


def braid_closure(word, strands: int | None = None) -> Diagram:
    return knot(braid_levels(word, strands), orient_down=True)


# The global twist sense of 4-plats and pretzel columns.  These are fixed so
# that C(3) is the left-handed trefoil and P(3,-2,3) is a positive diagram.
# The even-length closure reverses the twist sense so that C(1, a-1) = C(a).
PLAT_SENSE = -1
PRETZEL_SENSE = 1


def plat_levels(entries) -> list:
    """4-plat of a Conway notation: twists alternate between the middle pair
    and the left pair, closed so that the last twist box is not absorbed."""
    entries = [int(a) for a in entries]
    sense = PLAT_SENSE if len(entries) % 2 else -PLAT_SENSE
    lev = [("cap", 0), ("cap", 2)]
    for i, a in enumerate(entries):
        if a == 0:
            continue
        sgn = 1 if a > 0 else -1
        if i % 2 == 0:
            lev += [("x", 1, sense * sgn)] * abs(a)
        else:
            lev += [("x", 0, -sense * sgn)] * abs(a)
    if len(entries) % 2 == 1:
        lev += [("cup", 2), ("cup", 0)]
    else:
        lev += [("cup", 1), ("cup", 0)]
    return lev


def pretzel_levels(entries) -> list:
    entries = [int(p) for p in entries]
    n = len(entries)
    if n < 1:
        raise DiagramError("pretzel needs at least one column")
    lev = [("cap", 0)] + [("cap", 2 * i + 1) for i in range(n - 1)]
    for i, p in enumerate(entries):
        sgn = 1 if p > 0 else -1
        lev += [("x", 2 * i, PRETZEL_SENSE * sgn)] * abs(p)
    lev += [("cup", 2 * i + 1) for i in reversed(range(n - 1))] + [("cup", 0)]
    return lev


def mirror_levels(levels) -> list:
    return [(l[0], l[1], -l[2]) if l[0] == "x" else l for l in levels]


def double_levels(levels, framing: int, clasp: int) -> list:
    """Doubled Morse description: every strand becomes two parallel strands,
    ``framing`` full twists are inserted on the first doubled pair, followed by
    a clasp of type ``clasp``."""
    out = []
    first = True
    for lev in levels:
        kind, k = lev[0], lev[1]
        if kind == "cap":
            out += [("cap", 2 * k), ("cap", 2 * k + 1)]
            if first:
                first = False
                t = 1 if framing > 0 else -1
                out += [("x", 2 * k, t)] * (2 * abs(framing))
                j = 2 * k
                out += [("cap", j + 1), ("x", j, clasp), ("x", j + 2, clasp), ("cup", j + 1)]
        elif kind == "cup":
            out += [("cup", 2 * k + 1), ("cup", 2 * k)]
        else:
            t = lev[2]
            j = 2 * k
            out += [("x", j + 1, t), ("x", j, t), ("x", j + 2, t), ("x", j + 1, t)]
    return out
