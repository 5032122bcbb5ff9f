"""Column-swap operators and the statistic-transporting bijections.

The two swap operators act on neighbouring columns of equal height: the
queue-inversion flip scans down for the first row where the orientation
test gives the same answer for both top candidates, the family flip scans
down for the first row with equal entries.  Both are involutions; only the
family flip satisfies the braid relation, which is what makes its
reduced-word action well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagrams import Filling, join_rects, rect_decompose
from .perms import (
    apply_perm,
    identity_perm,
    invert_perm,
    reduced_word,
    stable_shortest_perm,
)
from .stats import EtaStatistic, QuadrupleSet, quinv_triple


def _check_swap_args(f: Filling, i: int, r: int, s: int | None = None) -> int:
    if not 1 <= i < f.width:
        raise ValueError(f"column {i} has no right neighbour")
    h = f.col_height(i)
    if f.col_height(i + 1) != h:
        raise ValueError(f"columns {i} and {i + 1} have unequal heights")
    top = r if s is None else s
    if not 1 <= top <= h:
        raise ValueError(f"row {top} outside columns of height {h}")
    return h


def t_swap(f: Filling, i: int, r: int) -> Filling:
    """Exchange the entries of row r in columns i and i+1."""
    _check_swap_args(f, i, r)
    row = list(f.row(r))
    row[i - 1], row[i] = row[i], row[i - 1]
    return f.with_row(r, row)


def t_swap_range(f: Filling, i: int, r: int, s: int) -> Filling:
    """Exchange rows r..s of columns i and i+1."""
    if r > s:
        raise ValueError("empty swap range")
    _check_swap_args(f, i, r, s)
    rows = [list(row) for row in f.rows]
    for x in range(r, s + 1):
        rows[x - 1][i - 1], rows[x - 1][i] = rows[x - 1][i], rows[x - 1][i - 1]
    return Filling(rows)


def rho(f: Filling, i: int, r: int | None = None, log=None) -> Filling:
    """Queue-inversion flip: swap rows k..r where k is the deepest row at
    which both top candidates orient the same way against the row below."""
    if r is None:
        r = f.col_height(i)
    _check_swap_args(f, i, r)
    k = r
    while k >= 1:
        c, d = f.entry(k - 1, i), f.entry(k - 1, i + 1)
        if quinv_triple(f.entry(k, i), c, d) == quinv_triple(f.entry(k, i + 1), c, d):
            break
        k -= 1
    else:  # pragma: no cover - row 0 is INF-padded, so k = 1 always qualifies
        raise AssertionError("no pivot row found")
    if log is not None:
        log.append(("rho", i, r))
    return t_swap_range(f, i, k, r)


def delta(f: Filling, i: int, r: int | None = None, log=None) -> Filling:
    """Family flip: swap rows k..r where k is the deepest row (at most r)
    with equal entries in columns i and i+1, or 1 when there is none."""
    if r is None:
        r = f.col_height(i)
    _check_swap_args(f, i, r)
    k = r
    while k > 1 and f.entry(k, i) != f.entry(k, i + 1):
        k -= 1
    if log is not None:
        log.append(("delta", i, r))
    return t_swap_range(f, i, k, r)


_OPS = {"rho": rho, "delta": delta, "tswap": t_swap}


@dataclass(frozen=True)
class BijectionTrace:
    """Replayable log of operator applications mapping input to output."""

    input: Filling
    output: Filling
    operator_log: tuple[tuple[str, int, int], ...]

    def replay(self) -> Filling:
        g = self.input
        for kind, i, r in self.operator_log:
            g = _OPS[kind](g, i, r)
        return g


def apply_reduced_word(
    f: Filling, letters: Iterable[int], kind: str, r: int | None = None
) -> Filling:
    """Apply the swaps named by `letters` left to right at row bound r."""
    op = _OPS[kind]
    g = f
    for i in letters:
        g = op(g, i, r if r is not None else g.col_height(i))
    return g


def sort_perm(a: Sequence[int], p: Sequence[int], kind: str) -> tuple[int, ...]:
    """The block-sorting permutation of the upper row a over the lower row p.

    bullet: sort a weakly decreasing, ties by position.
    diamond: descent columns first in place, then non-descents by weakly
             decreasing upper, ties by position.
    dagger: descent columns by weakly decreasing upper (ties by position),
            then non-descents in place.
    """
    if len(a) != len(p):
        raise ValueError("rows differ in length")
    k = len(a)
    if kind == "bullet":
        keys = [(-a[i], i) for i in range(k)]
    elif kind == "diamond":
        keys = [(1, -a[i], i) if a[i] <= p[i] else (0, i, 0) for i in range(k)]
    elif kind == "dagger":
        keys = [(0, -a[i], i) if a[i] > p[i] else (1, i, 0) for i in range(k)]
    else:
        raise ValueError(f"unknown sort kind {kind!r}")
    order = sorted(range(k), key=lambda i: keys[i])
    pi = [0] * k
    for dest, src in enumerate(order):
        pi[src] = dest
    return tuple(pi)


def _uppers(f: Filling, r: int) -> tuple[int, ...]:
    return tuple(f.entry(r + 1, c) for c in range(1, f.width + 1))


def conjugated_word_action(
    f: Filling, inner: tuple[int, ...], r: int, frame_kind: str, log=None
) -> Filling:
    """Act on rows <= r by `inner`, conjugated by the frame sort at row r+1.

    f must be rectangular.  The frame permutation is applied through
    full-height flips, the inner permutation through flips bounded at r,
    then the frame is undone; the net effect on rows r+1 and above is the
    identity.
    """
    if not f.is_rectangle():
        raise ValueError("conjugated actions act on rectangles")
    h = f.height
    pi = sort_perm(_uppers(f, r), f.row(r), frame_kind)
    g = f
    if r < h:
        for j in reduced_word(pi):
            g = delta(g, j, r + 1, log)
    for j in reduced_word(inner):
        g = delta(g, j, r, log)
    if r < h:
        for j in reduced_word(invert_perm(pi)):
            g = delta(g, j, r + 1, log)
    return g


def delta_word(f: Filling, w: Sequence[int], r: int, mode: str = "canonical", log=None) -> Filling:
    """Rearrange row r of a rectangle into w through the two-stage action.

    The neutral-block stage moves entries only inside blocks with a constant
    upper neighbour (clamped entries keep their relative order); the second
    stage permutes the non-descent block (descent block in dual mode).
    Raises when w is not reachable that way.
    """
    if not f.is_rectangle():
        raise ValueError("delta_word acts on rectangles")
    p = list(f.row(r))
    w = list(w)
    if sorted(p) != sorted(w):
        raise ValueError("w is not a rearrangement of the row")
    a = _uppers(f, r)
    dual = mode == "dual"

    # Stage 1 target: inside each neutral block, put w's confined entries at
    # their final slots and keep the clamped class in source order.
    mid = list(p)
    blocks: dict[int, list[int]] = {}
    for idx, upper in enumerate(a):
        blocks.setdefault(upper, []).append(idx)
    u_perm = list(identity_perm(len(p)))
    for upper, positions in blocks.items():
        confined_src = [p[i] for i in positions if _confined(p[i], upper, dual)]
        confined_dst = [w[i] for i in positions if _confined(w[i], upper, dual)]
        if sorted(confined_src) != sorted(confined_dst):
            raise ValueError("confined entries would have to change blocks")
        kept = [p[i] for i in positions if not _confined(p[i], upper, dual)]
        slot_vals = []
        ki = iter(kept)
        mi = iter(confined_dst)
        for i in positions:
            slot_vals.append(next(mi) if _confined(w[i], upper, dual) else next(ki))
        clamped_src = [_clamp(p[i], upper, dual) for i in positions]
        clamped_dst = [_clamp(v, upper, dual) for v in slot_vals]
        sub = stable_shortest_perm(clamped_src, clamped_dst)
        for off, i in enumerate(positions):
            u_perm[i] = positions[sub[off]]
        for off, i in enumerate(positions):
            mid[i] = slot_vals[off]
    g = conjugated_word_action(f, _to_frame(f, r, "bullet", tuple(u_perm)), r, "bullet", log)

    # Stage 2: permute the remaining block, computed in frame coordinates.
    frame_kind = "dagger" if dual else "diamond"
    g = _apply_block_perm(g, w, r, frame_kind, log)
    return g


def _confined(value, upper, dual: bool) -> bool:
    # canonical mode confines descent entries to their neutral block, dual
    # mode the non-descent ones
    return (value < upper) if not dual else (value >= upper)


def _clamp(value, upper, dual: bool):
    # the unconfined class collapses to a sentinel that collides with no
    # confined value: the upper value itself (canonical) or 0 (dual)
    if _confined(value, upper, dual):
        return value
    return upper if not dual else 0


def _apply_block_perm(g: Filling, w, r: int, frame_kind: str, log=None) -> Filling:
    """Send row r of g to w by permuting only the sortable block."""
    a = _uppers(g, r)
    p = g.row(r)
    pi = sort_perm(a, p, frame_kind)
    inv = invert_perm(pi)
    k = len(p)
    if frame_kind == "diamond":
        block = [j for j in range(k) if a[inv[j]] <= p[inv[j]]]
    else:
        block = [j for j in range(k) if a[inv[j]] > p[inv[j]]]
    fixed = [j for j in range(k) if j not in block]
    for j in fixed:
        if p[inv[j]] != w[inv[j]]:
            raise ValueError("target moves an entry outside the sortable block")
    src = [p[inv[j]] for j in block]
    dst = [w[inv[j]] for j in block]
    sub = stable_shortest_perm(src, dst)
    v_frame = list(identity_perm(k))
    for off, j in enumerate(block):
        v_frame[j] = block[sub[off]]
    return conjugated_word_action(g, tuple(v_frame), r, frame_kind, log)


def _to_frame(f: Filling, r: int, frame_kind: str, perm: tuple[int, ...]) -> tuple[int, ...]:
    """Transport a row permutation into the frame's coordinates."""
    pi = sort_perm(_uppers(f, r), f.row(r), frame_kind)
    inv = invert_perm(pi)
    return tuple(pi[perm[inv[j]]] for j in range(len(perm)))


# ---------------------------------------------------------------------------
# the statistic-transporting bijection


def _rho_sort(f: Filling, decreasing: bool, log=None) -> tuple[Filling, list[int]]:
    """Bubble the top row of a two-row rectangle into the target order.

    Rightward passes, swapping at each strict violation; returns the sorted
    filling together with the applied column indices in order.
    """
    word: list[int] = []
    g = f
    top = g.height
    changed = True
    while changed:
        changed = False
        for i in range(1, g.width):
            x, y = g.entry(top, i), g.entry(top, i + 1)
            if (x < y) if decreasing else (x > y):
                g = rho(g, i, top, log)
                word.append(i)
                changed = True
    return g, word


def _extreme_gamma(f: Filling, S: QuadrupleSet, descent_part: bool) -> Filling:
    """Two-row bijection on the all-descent or all-non-descent part."""
    if f.width <= 1 or f.height == 0:
        return f
    if descent_part:
        target_dec = S.contains(4, 3, 1, 2)  # (z>w>v>u) present
    else:
        target_dec = S.contains(2, 1, 3, 4)  # (v>u>=z>w) present
    base, word = _rho_sort(f, decreasing=target_dec)
    g = base
    for i in reversed(word):
        g = delta(g, i, g.height)
    return g


def _gamma_two_row(f: Filling, S: QuadrupleSet) -> Filling:
    if f.width <= 1:
        return f
    outer_dec = not S.contains(4, 1, 3, 2)  # (z>u>v>=w) absent
    sigma, word = _rho_sort(f, decreasing=outer_dec)
    desc = [c for c in range(1, sigma.width + 1) if sigma.entry(2, c) > sigma.entry(1, c)]
    nond = [c for c in range(1, sigma.width + 1) if c not in desc]
    part_gt = _extreme_gamma(sigma.columns(desc), S, descent_part=True)
    part_le = _extreme_gamma(sigma.columns(nond), S, descent_part=False)
    rows = [[0] * sigma.width for _ in range(2)]
    for part, cols in ((part_gt, desc), (part_le, nond)):
        for j, c in enumerate(cols):
            rows[0][c - 1] = part.entry(1, j + 1)
            rows[1][c - 1] = part.entry(2, j + 1)
    g = Filling(rows)
    for i in reversed(word):
        g = delta(g, i, 2)
    return g


def _gamma_rect(f: Filling, S: QuadrupleSet) -> Filling:
    m = f.height
    if m <= 1 or f.width <= 1:
        return f
    lower = _gamma_rect(Filling(f.rows[:-1]), S)
    g = Filling(lower.rows + (f.rows[-1],))
    two = Filling(f.rows[-2:])
    two_image = _gamma_two_row(two, S)
    w = stable_shortest_perm(two.rows[0], two_image.rows[0])
    for j in reduced_word(w):
        g = delta(g, j, m - 1)
    return g


def gamma(f: Filling, stat: EtaStatistic) -> Filling:
    """Row-class bijection carrying (maj, quinv) to (maj, eta).

    Works rectangle by rectangle; the top row of every rectangle is
    preserved.  Only the primal statistics are accepted: the dual variant
    is handled by conjugating with the complement flip.
    """
    if stat.dual:
        raise ValueError("gamma is defined for the primal statistics")
    pieces = [_gamma_rect(rect, stat.quad_set) for _h, _c0, rect in rect_decompose(f)]
    return join_rects(pieces)


# ---------------------------------------------------------------------------
# the bijection exchanging the two possible a2-elements


def _compatible_a2_pair(Si: QuadrupleSet, Sj: QuadrupleSet) -> bool:
    probes = {
        "a1": (4, 3, 1, 2),  # z>w>v>u
        "a2": (2, 1, 3, 4),  # v>u>=z>w
        "a3": (4, 1, 3, 2),  # z>u>v>=w
    }
    same_133 = all(
        Si.contains(*probes[c]) == Sj.contains(*probes[c]) for c in ("a1", "a3")
    )
    return same_133 and Si.contains(*probes["a2"]) != Sj.contains(*probes["a2"])


def _in_g_two_row_domain(f: Filling) -> bool:
    if f.height != 2 or f.width == 0 or not f.is_rectangle():
        return False
    top = f.row(2)
    if any(f.entry(2, c) > f.entry(1, c) for c in range(1, f.width + 1)):
        return False
    return all(top[i] >= top[i + 1] for i in range(len(top) - 1))


def _g_two_row(f: Filling) -> Filling:
    """The a2-exchange map on two-row all-non-descent fillings with weakly
    decreasing top row: reverse rows, re-sort the top with queue-inversion
    flips, then reverse each run under a constant top entry."""
    if not _in_g_two_row_domain(f):
        raise ValueError("not a two-row all-non-descent filling with sorted top")
    top = f.row(2)
    reversed_rows = Filling([tuple(reversed(f.row(1))), tuple(reversed(top))])
    tau, _ = _rho_sort(reversed_rows, decreasing=True)
    bottom = list(tau.row(1))
    new_top = tau.row(2)
    i = 0
    while i < len(new_top):
        j = i
        while j < len(new_top) and new_top[j] == new_top[i]:
            j += 1
        bottom[i:j] = reversed(bottom[i:j])
        i = j
    return Filling([tuple(bottom), new_top])


def g_bijection(f: Filling, Si: QuadrupleSet, Sj: QuadrupleSet) -> Filling:
    """Carrier of (maj, eta_i) to (maj, eta_j) for sets differing only in a2.

    On a two-row all-non-descent filling with weakly decreasing top row the
    map acts directly; on anything else it acts on the non-descent block of
    every row of every rectangle through the frame conjugation.
    """
    if not _compatible_a2_pair(Si, Sj):
        raise ValueError(f"{Si.name} and {Sj.name} do not differ exactly in a2")
    if _in_g_two_row_domain(f):
        return _g_two_row(f)
    pieces = []
    for _h, _c0, rect in rect_decompose(f):
        g = rect
        for r in range(1, g.height + 1):
            a = _uppers(g, r)
            p = g.row(r)
            nond = [c for c in range(1, g.width + 1) if a[c - 1] <= p[c - 1]]
            if len(nond) <= 1:
                continue
            order = sorted(nond, key=lambda c: (-a[c - 1], c))
            theta = Filling(
                [tuple(p[c - 1] for c in order), tuple(a[c - 1] for c in order)]
            )
            image = _g_two_row(theta)
            sub = stable_shortest_perm(theta.row(1), image.row(1))
            x = g.width - len(nond)
            v_frame = list(identity_perm(g.width))
            for off in range(len(nond)):
                v_frame[x + off] = x + sub[off]
            g = conjugated_word_action(g, tuple(v_frame), r, "diamond")
        pieces.append(g)
    return join_rects(pieces)
