"""Statistics on fillings: maj, inv, quinv, and the sixteen eta statistics.

A quadruple (z, w, u, v) sits on two equal-height columns: z above u in the
left one, w above v in the right one, with z = w = 0 on the padded row above
the top.  Each of the eight quadruple sets is given by chains of total
orderings for the z > w case; the z < w case follows by the (w, z, v, u)
symmetry and the z = w case reduces to the queue-inversion test.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagrams import Filling, complement_flip, conjugate, n_stat


def quinv_triple(a, b, c) -> int:
    """Orientation test shared by quinv and inv: 1 on a<b<c, b<c<a, c<a<b, a=b!=c."""
    if a == b:
        return 1 if b != c else 0
    return 1 if (a < b < c) or (b < c < a) or (c < a < b) else 0


# Chains for z > w.  The first two are mandatory for every set; the other
# four pick one element out of each of the classes a1, a2, a3, a4 (the a4
# choice is tied to a3).
_COMMON_CHAINS = ("z>v>=w>u", "u>=z>v>=w")
_SET_CHAINS = {
    1: ("z>w>v>u", "u>v>=z>w", "z>u>v>=w", "v>=z>w>u"),
    2: ("z>w>v>u", "v>u>=z>w", "z>u>v>=w", "v>=z>w>u"),
    3: ("z>w>u>v", "u>v>=z>w", "z>u>v>=w", "v>=z>w>u"),
    4: ("z>w>u>v", "v>u>=z>w", "z>u>v>=w", "v>=z>w>u"),
    5: ("z>w>v>u", "u>v>=z>w", "z>v>u>=w", "u>=z>w>v"),
    6: ("z>w>u>v", "u>v>=z>w", "z>v>u>=w", "u>=z>w>v"),
    7: ("z>w>v>u", "v>u>=z>w", "z>v>u>=w", "u>=z>w>v"),
    8: ("z>w>u>v", "v>u>=z>w", "z>v>u>=w", "u>=z>w>v"),
}


def _parse_chain(chain: str):
    symbols = []
    rels = []
    i = 0
    while i < len(chain):
        symbols.append(chain[i])
        i += 1
        if i < len(chain):
            if chain[i : i + 2] == ">=":
                rels.append(">=")
                i += 2
            else:
                rels.append(">")
                i += 1
    return tuple(symbols), tuple(rels)


_PARSED = {
    i: tuple(_parse_chain(c) for c in _COMMON_CHAINS + chains)
    for i, chains in _SET_CHAINS.items()
}


def _chain_holds(parsed, z, w, u, v) -> bool:
    vals = {"z": z, "w": w, "u": u, "v": v}
    symbols, rels = parsed
    for a, rel, b in zip(symbols, rels, symbols[1:]):
        x, y = vals[a], vals[b]
        if rel == ">" and not x > y:
            return False
        if rel == ">=" and not x >= y:
            return False
    return True


@lru_cache(maxsize=None)
def _pattern_member(set_id: int, pattern) -> bool:
    z, w, u, v = pattern
    if z == w:
        return bool(quinv_triple(z, u, v))
    if z < w:
        z, w, u, v = w, z, v, u
    return any(_chain_holds(p, z, w, u, v) for p in _PARSED[set_id])


def _order_pattern(z, w, u, v):
    levels = sorted(set((z, w, u, v)))
    rank = {x: r for r, x in enumerate(levels)}
    return (rank[z], rank[w], rank[u], rank[v])


@dataclass(frozen=True)
class QuadrupleSet:
    """One of the eight admissible membership predicates on quadruples."""

    id: int

    def __post_init__(self):
        if self.id not in _SET_CHAINS:
            raise ValueError(f"no quadruple set S{self.id}")

    def contains(self, z, w, u, v) -> bool:
        if u == v:
            return False
        return _pattern_member(self.id, _order_pattern(z, w, u, v))

    @property
    def name(self) -> str:
        return f"S{self.id}"


def quad_membership(S: QuadrupleSet, z, w, u, v) -> int:
    return 1 if S.contains(z, w, u, v) else 0


ALL_SETS = tuple(QuadrupleSet(i) for i in range(1, 9))


@dataclass(frozen=True)
class EtaStatistic:
    """A statistic in the sixteen-member family: a set id plus a dual flag."""

    set_id: int
    dual: bool = False

    @property
    def quad_set(self) -> QuadrupleSet:
        return QuadrupleSet(self.set_id)

    @property
    def name(self) -> str:
        return f"S{self.set_id}*" if self.dual else f"S{self.set_id}"

    @classmethod
    def parse(cls, text: str) -> "EtaStatistic":
        text = text.strip()
        dual = text.endswith("*")
        if dual:
            text = text[:-1]
        if not (text.upper().startswith("S") and text[1:].isdigit()):
            raise ValueError(f"cannot parse statistic {text!r}")
        return cls(int(text[1:]), dual)


def all_statistics() -> tuple[EtaStatistic, ...]:
    return tuple(
        EtaStatistic(i, dual) for dual in (False, True) for i in range(1, 9)
    )


def maj(f: Filling) -> int:
    """Sum of leg+1 over descent cells (entry above strictly exceeds entry below)."""
    total = 0
    for c in range(1, f.width + 1):
        h = f.col_height(c)
        for r in range(2, h + 1):
            if f.entry(r, c) > f.entry(r - 1, c):
                total += h - r + 1
    return total


def descent_count(f: Filling) -> int:
    return sum(
        1
        for c in range(1, f.width + 1)
        for r in range(2, f.col_height(c) + 1)
        if f.entry(r, c) > f.entry(r - 1, c)
    )


def quinv(f: Filling) -> int:
    """Queue-inversion triples, with a 0 padded above the top of each column."""
    total = 0
    for r in range(1, f.height + 1):
        row = f.row(r)
        for c1 in range(1, len(row) + 1):
            a = f.entry(r + 1, c1)
            b = row[c1 - 1]
            for c2 in range(c1 + 1, len(row) + 1):
                total += quinv_triple(a, b, row[c2 - 1])
    return total


def inv(f: Filling) -> int:
    """Inversion triples, with an INF padded below the bottom of each column."""
    total = 0
    for r in range(1, f.height + 1):
        row = f.row(r)
        for c1 in range(1, len(row) + 1):
            a = row[c1 - 1]
            b = f.entry(r - 1, c1)
            for c2 in range(c1 + 1, len(row) + 1):
                total += quinv_triple(a, b, row[c2 - 1])
    return total


def eta_quadruples(f: Filling, S: QuadrupleSet) -> int:
    """S-quadruples over every pair of equal-height columns, padded row included."""
    total = 0
    for c1 in range(1, f.width + 1):
        h = f.col_height(c1)
        for c2 in range(c1 + 1, f.width + 1):
            if f.col_height(c2) != h:
                continue
            for r in range(1, h + 1):
                total += quad_membership(
                    S,
                    f.entry(r + 1, c1),
                    f.entry(r + 1, c2),
                    f.entry(r, c1),
                    f.entry(r, c2),
                )
    return total


def row_pair_quadruples(f: Filling, r: int, S: QuadrupleSet, member=True) -> int:
    """(Non-)S-quadruples between rows r and r+1 over equal-height column pairs."""
    total = 0
    for c1 in range(1, f.width + 1):
        if f.col_height(c1) < r:
            continue
        for c2 in range(c1 + 1, f.width + 1):
            if f.col_height(c2) != f.col_height(c1) or f.col_height(c2) < r:
                continue
            hit = quad_membership(
                S, f.entry(r + 1, c1), f.entry(r + 1, c2), f.entry(r, c1), f.entry(r, c2)
            )
            total += hit if member else 1 - hit
    return total


def cross_triples(f: Filling, kind: str = "quinv", member=True) -> int:
    """(Non-)triples whose (a,b) column is strictly taller than c's column.

    kind="quinv" counts queue-inversion triples with the 0 pad above;
    kind="inv" counts inversion triples with the INF pad below.
    """
    total = 0
    for r in range(1, f.height + 1):
        row = f.row(r)
        for c1 in range(1, len(row) + 1):
            h1 = f.col_height(c1)
            if kind == "quinv":
                a, b = f.entry(r + 1, c1), row[c1 - 1]
            else:
                a, b = row[c1 - 1], f.entry(r - 1, c1)
            for c2 in range(c1 + 1, len(row) + 1):
                if f.col_height(c2) >= h1:
                    continue
                hit = quinv_triple(a, b, row[c2 - 1])
                total += hit if member else 1 - hit
    return total


def eta(f: Filling, stat: EtaStatistic, alphabet: int | None = None) -> int:
    """The statistic attached to (S, dual) evaluated on f.

    For the dual variant the input is read as the complement-flip image of
    an underlying filling; the result does not depend on the alphabet as
    long as it covers the largest entry.
    """
    S = stat.quad_set
    if not stat.dual:
        return eta_quadruples(f, S) + cross_triples(f, "quinv")
    N = f.max_entry() if alphabet is None else alphabet
    if N < f.max_entry():
        raise ValueError("alphabet smaller than the largest entry")
    preimage = complement_flip(f, N)
    return eta_quadruples(preimage, S) + cross_triples(f, "inv")


def eta_bar(f: Filling, stat: EtaStatistic, alphabet: int | None = None) -> int:
    """Complementary count: eta + eta_bar = n(conjugate(shape))."""
    return n_stat(conjugate(f.shape)) - eta(f, stat, alphabet)


def admissible_pairs() -> list[tuple[str, EtaStatistic]]:
    """(mode, statistic) pairs for which the compact formula is proved.

    Decided from the defining predicates: canonical mode needs the
    increasing a2-element (v>u>=z>w), dual mode the decreasing a1-element
    (z>w>v>u).
    """
    out = []
    for S in ALL_SETS:
        for dual in (False, True):
            stat = EtaStatistic(S.id, dual)
            if S.contains(2, 1, 3, 4):  # (v>u>=z>w)
                out.append(("canonical", stat))
            if S.contains(4, 3, 1, 2):  # (z>w>v>u)
                out.append(("dual", stat))
    return out


def is_admissible(mode: str, stat: EtaStatistic) -> bool:
    S = stat.quad_set
    if mode == "canonical":
        return S.contains(2, 1, 3, 4)
    if mode == "dual":
        return S.contains(4, 3, 1, 2)
    raise ValueError(f"unknown mode {mode!r}")
