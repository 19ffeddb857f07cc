"""Rational-tangle calculus for 2-bridge knots.

Convention: C(p1, ..., pk) has value  p_k + 1/(p_{k-1} + ... + 1/p_1),
evaluated on projective pairs (num, den) so zero entries never divide by
zero.  The mirror of C(p1..pk) is C(-p1..-pk).  The 2-bridge knot of value
num/den is determined by p = |num| and q = den mod p (Schubert).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class Fraction:
    """Value of a Conway notation, in lowest terms with ``p >= 0``.

    ``q`` is kept as an integer representative; classification works mod p.
    """
    p: int
    q: int

    @property
    def is_knot(self) -> bool:
        return self.p % 2 == 1

    def mirror(self) -> "Fraction":
        return Fraction(self.p, -self.q)

    def residue(self) -> int:
        return self.q % self.p if self.p else self.q

    def __str__(self):
        return f"{self.p}/{self.q}"


def _normalize(n: int, d: int) -> Fraction:
    g = gcd(n, d)
    if g == 0:
        raise ValueError("0/0 is not a tangle value")
    n, d = n // g, d // g
    if n < 0 or (n == 0 and d < 0):
        n, d = -n, -d
    return Fraction(n, d)


def fraction(entries) -> Fraction:
    entries = [int(a) for a in entries]
    if not entries:
        return Fraction(1, 0)     # the empty notation closes to the unknot
    n, d = entries[0], 1
    for a in entries[1:]:
        n, d = a * n + d, n
    return _normalize(n, d)


def is_unknot(f: Fraction) -> bool:
    return f.p == 1


def _inverse_mod(q: int, p: int) -> int | None:
    try:
        return pow(q, -1, p)
    except ValueError:
        return None


def two_bridge_equivalent(f1: Fraction, f2: Fraction) -> bool:
    """Unoriented equivalence of the 2-bridge knots (no mirroring)."""
    if f1.p != f2.p:
        return False
    p = f1.p
    if p <= 1:
        return True
    q1, q2 = f1.residue(), f2.residue()
    return q1 == q2 or (q1 * q2 - 1) % p == 0


def two_bridge_equivalent_up_to_mirror(f1: Fraction, f2: Fraction) -> bool:
    return two_bridge_equivalent(f1, f2) or two_bridge_equivalent(f1, f2.mirror())


def is_amphichiral(f: Fraction) -> bool:
    return two_bridge_equivalent(f, f.mirror())


def positive_expansion(f: Fraction) -> list[int]:
    """All-positive Conway notation for the knot of ``f`` or of its mirror.

    Takes 0 < q < p and returns the regular continued fraction of p/q,
    listed in Conway order (the last entry is the integer part).
    """
    if f.p <= 1:
        raise ValueError("unknot has no reduced 2-bridge notation")
    p, q = f.p, f.residue()
    terms = []
    while q:
        terms.append(p // q)
        p, q = q, p % q
    return terms[::-1]


def crossing_number_two_bridge(f: Fraction) -> int:
    return sum(positive_expansion(f))


def _two_bridge_entries(e):
    """Strip mirrors from a TwoBridge expression; returns entries or None."""
    from .notation import Mirror, TwoBridge
    sign = 1
    while isinstance(e, Mirror):
        sign = -sign
        e = e.inner
    if isinstance(e, TwoBridge):
        return [sign * a for a in e.entries]
    return None


def braid_index_family(e) -> int:
    """Braid index of C(2a,2b-1) (b+1) and of C(-2,-2a+1,-2b+1) (a+2),
    as determined by Murasugi for 2-bridge knots; mirrors allowed."""
    ent = _two_bridge_entries(e)
    if ent is None:
        raise ValueError("not a 2-bridge expression")
    for s in (1, -1):
        v = [s * a for a in ent]
        if len(v) == 2 and v[0] > 0 and v[0] % 2 == 0 and v[1] > 0 and v[1] % 2 == 1:
            return (v[1] + 1) // 2 + 1
        if len(v) == 3 and v[0] == -2 and v[1] < 0 and v[1] % 2 and v[2] < 0 and v[2] % 2:
            a = (1 - v[1]) // 2
            return a + 2
    raise ValueError(f"C{tuple(ent)} is outside the supported braid-index families; "
                     "use the MFW bound with a diagram instead")


def pretzel_fraction(entries) -> Fraction:
    """2-bridge value of P(p1..pn) when at most one band has |p_j| != 1.

    The pretzel is the Montesinos sum of the tangles 1/p_j; bands of one
    crossing are integer tangles and fold into the remaining band, giving
    N + 1/p_j with N the sum of the unit bands.
    """
    entries = [int(a) for a in entries]
    big = [a for a in entries if abs(a) != 1]
    if len(big) > 1:
        raise ValueError(f"P{tuple(entries)} has two bands with |p| != 1; not 2-bridge this way")
    n = sum(a for a in entries if abs(a) == 1)
    if not big:
        return _normalize(n, 1)
    pj = big[0]
    return _normalize(n * pj + 1, pj)


def apply_crossing_changes(entries, band: int, count: int) -> list[int]:
    """Change ``|count|`` crossings of twist region ``band`` (1-based); each
    change moves that entry by 2 in the direction of ``count``."""
    entries = [int(a) for a in entries]
    if not 1 <= band <= len(entries):
        raise IndexError(f"band {band} outside 1..{len(entries)}")
    entries[band - 1] += 2 * count
    return entries


def run_script(entries, script) -> tuple[list[int], int]:
    """Apply a list of (band, count) rewrites; returns the final notation and
    the total number of crossing changes used."""
    used = 0
    for band, count in script:
        entries = apply_crossing_changes(entries, band, count)
        used += abs(count)
    return entries, used


def script_is_realizable(entries, script) -> bool:
    """True when every rewrite changes crossings that exist: band b can take
    at most |p_b| changes in total, all in the direction of -sign(p_b)."""
    entries = [int(a) for a in entries]
    used = [0] * len(entries)
    for band, count in script:
        if not 1 <= band <= len(entries) or count == 0:
            return False
        e = entries[band - 1]
        if e == 0 or (count > 0) == (e > 0):
            return False
        used[band - 1] += abs(count)
        if used[band - 1] > abs(e):
            return False
    return True


def find_unknotting_script(entries, max_changes: int):
    """Shortest realizable script (fewest crossing changes, at most
    ``max_changes``) turning C(entries) into the unknot, or None."""
    start = tuple(int(a) for a in entries)
    if is_unknot(fraction(start)):
        return []
    room = [abs(a) for a in start]
    step = [-1 if a > 0 else 1 for a in start]
    zero = tuple(0 for _ in start)
    seen = {zero}
    frontier = [(zero, [])]
    for _ in range(max_changes):
        nxt = []
        for used, script in frontier:
            for b in range(len(start)):
                if used[b] >= room[b]:
                    continue
                u = list(used)
                u[b] += 1
                u = tuple(u)
                if u in seen:
                    continue
                seen.add(u)
                s2 = script + [(b + 1, step[b])]
                cur = [a + 2 * step[i] * u[i] for i, a in enumerate(start)]
                if is_unknot(fraction(cur)):
                    return _compress(s2)
                nxt.append((u, s2))
        frontier = nxt
    return None


def _compress(script):
    out = []
    for band, count in script:
        if out and out[-1][0] == band:
            out[-1] = (band, out[-1][1] + count)
        else:
            out.append((band, count))
    return out
