"""Knot expressions: parsing, rendering and standard diagrams.

Grammar (whitespace-insensitive)::

    expr    := term ('#' term)*
    term    := [INT '*'] postfix            n * K is the n-fold sum
    postfix := atom '*'*                    postfix * is the mirror
    atom    := '0_1' | NAME | 'C(' ints ')' | 'P(' ints ')' | 'T(' int ',' int ')'
             | 'B[' int ';' ints ']' | 'D(' expr [',' ('+'|'-')] ')'
             | 'S[' ('tw'|'P'|'Q') '](' expr ')' | '(' expr ')'
    NAME    := digits '_' digits | 'K' digits ('a'|'n') digits

``D(K)`` is the untwisted Whitehead double with a positive clasp, ``D(K,-)``
the one with a negative clasp.  ``S[pat](J)`` names a satellite of J that is
only known through curated facts and has no diagram: ``tw`` is the positively
twisted double, ``P`` the clasp pattern that is 10_133* in S^3 and ``Q`` the
genus one pattern that is P(3,3,3) in S^3.  A mirror is pushed into the parts
of a connected sum, so ``(3_1 # 4_1)*`` reads as ``3_1* # 4_1*``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import construct
from .diagram import Diagram, DiagramError, connected_sum_diagram


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class UnsupportedExpr(ValueError):
    pass


# -- AST --------------------------------------------------------------------

class KnotExpr:
    __slots__ = ()

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Unknot(KnotExpr):
    pass


@dataclass(frozen=True)
class TwoBridge(KnotExpr):
    entries: tuple


@dataclass(frozen=True)
class Pretzel(KnotExpr):
    entries: tuple


@dataclass(frozen=True)
class Torus(KnotExpr):
    p: int
    q: int


@dataclass(frozen=True)
class BraidClosure(KnotExpr):
    word: tuple
    strands: int


@dataclass(frozen=True)
class Named(KnotExpr):
    id: str


@dataclass(frozen=True)
class Mirror(KnotExpr):
    inner: KnotExpr


@dataclass(frozen=True)
class ConnectedSum(KnotExpr):
    parts: tuple


@dataclass(frozen=True)
class WhiteheadDouble(KnotExpr):
    companion: KnotExpr
    clasp_sign: int = 1


SATELLITE_PATTERNS = ("tw", "P", "Q")


@dataclass(frozen=True)
class Satellite(KnotExpr):
    pattern: str
    companion: KnotExpr


# -- normalisation ----------------------------------------------------------

def mirror(e: KnotExpr) -> KnotExpr:
    if isinstance(e, Mirror):
        return e.inner
    if isinstance(e, Unknot):
        return e
    if isinstance(e, ConnectedSum):
        return ConnectedSum(tuple(mirror(p) for p in e.parts))
    return Mirror(e)


def connected_sum(parts) -> KnotExpr:
    flat = []
    for p in parts:
        if isinstance(p, ConnectedSum):
            flat.extend(p.parts)
        elif not isinstance(p, Unknot):
            flat.append(p)
    if not flat:
        return Unknot()
    if len(flat) == 1:
        return flat[0]
    return ConnectedSum(tuple(flat))


def repeat(n: int, e: KnotExpr) -> KnotExpr:
    return connected_sum([e] * n)


def normalize(e: KnotExpr) -> KnotExpr:
    if isinstance(e, Mirror):
        return mirror(normalize(e.inner))
    if isinstance(e, ConnectedSum):
        return connected_sum([normalize(p) for p in e.parts])
    if isinstance(e, WhiteheadDouble):
        return WhiteheadDouble(normalize(e.companion), e.clasp_sign)
    if isinstance(e, Satellite):
        return Satellite(e.pattern, normalize(e.companion))
    if isinstance(e, Named) and e.id == "0_1":
        return Unknot()
    if isinstance(e, (TwoBridge, Pretzel)):
        return type(e)(tuple(int(a) for a in e.entries))
    return e


# -- parser -----------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<name>K\d+[an]\d+|\d+_\d+)
  | (?P<int>[+-]?\d+)
  | (?P<punct>[()\[\];,#*])
  | (?P<head>[CPTBDS])
  | (?P<pat>tw|Q)
  | (?P<sign>[+-])
""", re.VERBOSE)


def _tokenize(text: str):
    toks = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), i))
        i = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self, kind=None, value=None):
        t = self.peek()
        if (kind and t[0] != kind) or (value is not None and t[1] != value):
            want = value if value is not None else kind
            got = t[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", t[2])
        self.i += 1
        return t

    def expr(self):
        parts = [self.term()]
        while self.peek()[1] == "#":
            self.take()
            parts.append(self.term())
        return connected_sum(parts)

    def term(self):
        t = self.peek()
        if t[0] == "int" and self.peek(1)[1] == "*":
            n = int(t[1])
            if n < 0:
                raise ParseError("repetition count must be nonnegative", t[2])
            self.i += 2
            return repeat(n, self.postfix())
        if t[0] == "end" or t[1] == "#":
            raise ParseError("empty connected-sum part", t[2])
        return self.postfix()

    def postfix(self):
        e = self.atom()
        while self.peek()[1] == "*":
            self.take()
            e = mirror(e)
        return e

    def ints(self, close):
        out = [self.integer()]
        while self.peek()[1] == ",":
            self.take()
            out.append(self.integer())
        self.take("punct", close)
        return tuple(out)

    def integer(self):
        t = self.peek()
        if t[0] == "int":
            self.i += 1
            return int(t[1])
        if t[0] == "sign" and self.peek(1)[0] == "int":
            self.i += 2
            return int(t[1] + self.toks[self.i - 1][1])
        raise ParseError(f"expected an integer, got {t[1] or 'end of input'!r}", t[2])

    def atom(self):
        t = self.peek()
        if t[0] == "name":
            self.i += 1
            return Unknot() if t[1] == "0_1" else Named(t[1])
        if t[1] == "(":
            self.take()
            e = self.expr()
            self.take("punct", ")")
            return e
        if t[0] == "head":
            self.i += 1
            h = t[1]
            if h == "B":
                self.take("punct", "[")
                s = self.integer()
                self.take("punct", ";")
                word = self.ints("]") if self.peek()[1] != "]" else self._empty("]")
                if s < 1 or any(g == 0 or abs(g) >= s for g in word):
                    raise ParseError(f"braid word does not fit on {s} strands", t[2])
                return BraidClosure(word, s)
            if h == "S":
                self.take("punct", "[")
                pt = self.peek()
                if pt[1] not in SATELLITE_PATTERNS:
                    raise ParseError("satellite pattern must be tw, P or Q", pt[2])
                self.i += 1
                self.take("punct", "]")
                self.take("punct", "(")
                comp = self.expr()
                self.take("punct", ")")
                return Satellite(pt[1], comp)
            self.take("punct", "(")
            if h == "D":
                comp = self.expr()
                sign = 1
                if self.peek()[1] == ",":
                    self.take()
                    st = self.peek()
                    if st[1] in ("+", "-", "+1", "-1", "1"):
                        self.i += 1
                        sign = -1 if st[1].startswith("-") else 1
                    else:
                        raise ParseError("clasp sign must be + or -", st[2])
                self.take("punct", ")")
                return WhiteheadDouble(comp, sign)
            vals = self.ints(")")
            if h == "C":
                return TwoBridge(vals)
            if h == "P":
                return Pretzel(vals)
            if len(vals) != 2:
                raise ParseError("T(p,q) takes two integers", t[2])
            return Torus(*vals)
        raise ParseError(f"unexpected {t[1] or 'end of input'!r}", t[2])

    def _empty(self, close):
        self.take("punct", close)
        return ()


def parse(text: str) -> KnotExpr:
    p = _Parser(text)
    e = p.expr()
    t = p.peek()
    if t[0] != "end":
        raise ParseError(f"trailing input {t[1]!r}", t[2])
    return normalize(e)


# -- rendering ----------------------------------------------------------------

def render(e: KnotExpr) -> str:
    if isinstance(e, Unknot):
        return "0_1"
    if isinstance(e, TwoBridge):
        return "C(" + ",".join(str(a) for a in e.entries) + ")"
    if isinstance(e, Pretzel):
        return "P(" + ",".join(str(a) for a in e.entries) + ")"
    if isinstance(e, Torus):
        return f"T({e.p},{e.q})"
    if isinstance(e, BraidClosure):
        return f"B[{e.strands};" + ",".join(str(g) for g in e.word) + "]"
    if isinstance(e, Named):
        return e.id
    if isinstance(e, Mirror):
        inner = render(e.inner)
        if isinstance(e.inner, ConnectedSum):
            inner = f"({inner})"
        return inner + "*"
    if isinstance(e, ConnectedSum):
        return " # ".join(render(p) for p in e.parts)
    if isinstance(e, WhiteheadDouble):
        c = render(e.companion)
        return f"D({c})" if e.clasp_sign > 0 else f"D({c},-)"
    if isinstance(e, Satellite):
        return f"S[{e.pattern}]({render(e.companion)})"
    raise TypeError(f"not a knot expression: {e!r}")


# -- standard diagrams ----------------------------------------------------------

def _levels(e: KnotExpr):
    """Morse description for the expression kinds that have one."""
    from . import facts
    if isinstance(e, Mirror):
        lev, down = _levels(e.inner)
        return construct.mirror_levels(lev), down
    if isinstance(e, TwoBridge):
        return construct.plat_levels(e.entries), False
    if isinstance(e, Pretzel):
        return construct.pretzel_levels(e.entries), False
    if isinstance(e, BraidClosure):
        return construct.braid_levels(e.word, e.strands), True
    if isinstance(e, Torus):
        p, q = e.p, e.q
        if abs(p) == 2:
            p, q = q, p
        if abs(q) != 2:
            raise UnsupportedExpr("T(p,q) needs |p| = 2 or |q| = 2; use a braid word")
        sgn = 1 if p * q > 0 else -1
        return construct.braid_levels([sgn] * abs(p), 2), True
    if isinstance(e, Satellite):
        raise UnsupportedExpr(f"{render(e)} is a satellite known only through curated facts")
    if isinstance(e, Named):
        conway = facts.conway_of(e.id)
        if conway is not None:
            return construct.plat_levels(conway), False
    raise UnsupportedExpr(f"no Morse description for {render(e)}")


def whitehead_double_levels(companion: KnotExpr, clasp_sign: int = 1):
    lev, down = _levels(companion)
    w = construct.knot(lev, down).writhe()
    return construct.double_levels(lev, -w, clasp_sign)


def standard_diagram(e: KnotExpr) -> Diagram:
    from . import facts
    e = normalize(e)
    if isinstance(e, Unknot):
        return Diagram.unknot()
    if isinstance(e, ConnectedSum):
        D = Diagram.unknot()
        for p in e.parts:
            D = connected_sum_diagram(D, standard_diagram(p))
        return D
    if isinstance(e, Mirror):
        return Diagram.from_link(standard_diagram(e.inner).mirror())
    if isinstance(e, WhiteheadDouble):
        return construct.knot(whitehead_double_levels(e.companion, e.clasp_sign))
    if isinstance(e, Satellite):
        raise UnsupportedExpr(f"{render(e)} is a satellite known only through curated facts")
    if isinstance(e, Named):
        if facts.conway_of(e.id) is None:
            D = facts.pinned_diagram(e.id)
            if D is None:
                raise UnsupportedExpr(f"unknown named knot {e.id!r}")
            return D
    lev, down = _levels(e)
    try:
        return construct.knot(lev, down)
    except DiagramError as exc:
        raise UnsupportedExpr(f"{render(e)} is not a knot: {exc}") from None
