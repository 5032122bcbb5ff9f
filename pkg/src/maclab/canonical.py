"""Canonical and dual canonical tableaux, their families, and coefficients.

Everything here works rectangle by rectangle: a filling is (dual) canonical
when each of its maximal rectangles is, and families, coefficients and the
compact sums all factor the same way.  Rows are processed against the row
above, with the virtual all-zero row above the top.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .diagrams import Filling, enumerate_fillings, join_rects, rect_decompose
from .flips import (
    BijectionTrace,
    _apply_block_perm,
    _uppers,
    conjugated_word_action,
    sort_perm,
)
from .perms import (
    apply_perm,
    identity_perm,
    invert_perm,
    multiset_permutations,
    stable_shortest_perm,
)
from .qt import MonomialSym, QtPoly, t_binomial
from .stats import EtaStatistic, eta, is_admissible, maj

MODES = ("canonical", "dual")


def _check_mode(mode: str) -> bool:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    return mode == "dual"


@dataclass(frozen=True)
class Block:
    """A maximal entry sequence of one row, classified against the row above."""

    kind: str  # "descent" | "nondescent" | "neutral"
    positions: tuple[int, ...]  # 1-based columns
    entries: tuple[int, ...]
    upper: tuple[int, ...]


def extract_blocks(f: Filling, r: int) -> list[Block]:
    """The descent block, the non-descent block, and all neutral blocks of row r.

    Blocks are maximal by inclusion and need not be contiguous.  Empty
    descent or non-descent blocks are omitted.
    """
    if not 1 <= r <= f.height:
        raise ValueError(f"no row {r}")
    cols = [c for c in range(1, f.width + 1) if f.col_height(c) >= r]
    a = [f.entry(r + 1, c) for c in cols]
    p = [f.entry(r, c) for c in cols]
    out = []
    desc = [i for i in range(len(cols)) if a[i] > p[i]]
    nond = [i for i in range(len(cols)) if a[i] <= p[i]]
    for kind, idxs in (("descent", desc), ("nondescent", nond)):
        if idxs:
            out.append(
                Block(
                    kind,
                    tuple(cols[i] for i in idxs),
                    tuple(p[i] for i in idxs),
                    tuple(a[i] for i in idxs),
                )
            )
    seen: dict[int, list[int]] = {}
    for i in range(len(cols)):
        seen.setdefault(a[i], []).append(i)
    for upper_val in sorted(seen, reverse=True):
        idxs = seen[upper_val]
        out.append(
            Block(
                "neutral",
                tuple(cols[i] for i in idxs),
                tuple(p[i] for i in idxs),
                tuple(a[i] for i in idxs),
            )
        )
    return out


def alpha(block: Block) -> tuple[int, ...]:
    """Clamp a neutral block's entries from above by the shared upper value."""
    if block.kind != "neutral":
        raise ValueError("alpha is defined on neutral blocks")
    a = block.upper[0]
    return tuple(a if x >= a else x for x in block.entries)


def alpha_bar(block: Block) -> tuple[int, ...]:
    """Clamp a neutral block's entries from below by the shared upper value."""
    if block.kind != "neutral":
        raise ValueError("alpha_bar is defined on neutral blocks")
    a = block.upper[0]
    return tuple(a if x < a else x for x in block.entries)


def _rect_rowpair_ok(a, p, dual: bool) -> bool:
    k = len(p)
    # equal-upper pairs: entries below the shared value first, each class
    # weakly decreasing
    for i in range(k):
        for j in range(i + 1, k):
            if a[i] != a[j]:
                continue
            av, b, c = a[i], p[i], p[j]
            if not (av > b >= c or c >= av > b or b >= c >= av):
                return False
    # sortable block ordered by weakly decreasing uppers
    if dual:
        idxs = [i for i in range(k) if a[i] > p[i]]
    else:
        idxs = [i for i in range(k) if a[i] <= p[i]]
    for x in range(len(idxs)):
        for y in range(x + 1, len(idxs)):
            i, j = idxs[x], idxs[y]
            if a[i] >= a[j]:
                if not p[i] >= p[j]:
                    return False
            elif not p[i] <= p[j]:
                return False
    return True


def _is_canonical_rect(f: Filling, dual: bool) -> bool:
    for r in range(1, f.height + 1):
        if not _rect_rowpair_ok(_uppers(f, r), f.row(r), dual):
            return False
    return True


def is_canonical(f: Filling, mode: str = "canonical") -> bool:
    dual = _check_mode(mode)
    return all(_is_canonical_rect(rect, dual) for _h, _c0, rect in rect_decompose(f))


def is_dual_canonical(f: Filling) -> bool:
    return is_canonical(f, "dual")


def _clamp_fn(upper, dual: bool):
    """Collapse the class a block permutation may not reorder.

    Canonical mode fixes the relative order of entries at or above the upper
    value, dual mode of those below it.  The dual sentinel is 0, not the
    upper value itself, because a non-descent entry may equal it.
    """
    if not dual:
        return lambda x: upper if x >= upper else x
    return lambda x: 0 if x < upper else x


def _neutral_runs(fa):
    """Contiguous runs of equal values in a frame-sorted upper row."""
    runs = []
    i = 0
    while i < len(fa):
        j = i
        while j < len(fa) and fa[j] == fa[i]:
            j += 1
        runs.append((i, j))
        i = j
    return runs


def _canonical_row_sort(g: Filling, r: int, dual: bool, log=None) -> Filling:
    """Sort row r of a rectangle into its canonical arrangement."""
    k = g.width
    # sortable block first: weakly decreasing in the frame order
    frame_kind = "dagger" if dual else "diamond"
    a = _uppers(g, r)
    p = g.row(r)
    pi = sort_perm(a, p, frame_kind)
    inv = invert_perm(pi)
    if dual:
        block = [j for j in range(k) if a[inv[j]] > p[inv[j]]]
    else:
        block = [j for j in range(k) if a[inv[j]] <= p[inv[j]]]
    target = list(p)
    entries = sorted((p[inv[j]] for j in block), reverse=True)
    for j, val in zip(block, entries):
        target[inv[j]] = val
    g = _apply_block_perm(g, target, r, frame_kind, log)

    # then every neutral block: confined entries to the front (canonical) or
    # back (dual), the clamped class keeping its relative order
    a = _uppers(g, r)
    p = g.row(r)
    pib = sort_perm(a, p, "bullet")
    invb = invert_perm(pib)
    fa = apply_perm(pib, a)
    fp = apply_perm(pib, p)
    u_frame = list(identity_perm(k))
    for lo, hi in _neutral_runs(fa):
        upper = fa[lo]
        seg = list(fp[lo:hi])
        if dual:
            less = [x for x in seg if x < upper]
            geq = sorted((x for x in seg if x >= upper), reverse=True)
        else:
            less = sorted((x for x in seg if x < upper), reverse=True)
            geq = [x for x in seg if x >= upper]
        target_seg = less + geq
        clamp = _clamp_fn(upper, dual)
        sub = stable_shortest_perm([clamp(x) for x in seg], [clamp(x) for x in target_seg])
        for off in range(hi - lo):
            u_frame[lo + off] = lo + sub[off]
    return conjugated_word_action(g, tuple(u_frame), r, "bullet", log)


def _canonicalize_rect(f: Filling, dual: bool, log=None) -> Filling:
    g = f
    for r in range(g.height, 0, -1):
        g = _canonical_row_sort(g, r, dual, log)
    return g


def canonicalize(f: Filling, mode: str = "canonical") -> tuple[Filling, BijectionTrace]:
    """The unique (dual) canonical filling whose family contains f.

    Returns the canonical filling together with a replayable operator trace.
    """
    dual = _check_mode(mode)
    log: list = []
    pieces = []
    for _h, c0, rect in rect_decompose(f):
        sub_log: list = []
        pieces.append(_canonicalize_rect(rect, dual, sub_log))
        # shift the logged column indices back to the ambient filling
        log.extend((kind, i + c0 - 1, r) for kind, i, r in sub_log)
    out = join_rects(pieces)
    return out, BijectionTrace(f, out, tuple(log))


def _neutral_choice_perms(tau: Filling, r: int, dual: bool) -> Iterator[tuple[int, ...]]:
    """In-frame permutations realizing every neutral-block rearrangement."""
    k = tau.width
    a = _uppers(tau, r)
    p = tau.row(r)
    pib = sort_perm(a, p, "bullet")
    fa = apply_perm(pib, a)
    fp = apply_perm(pib, p)
    runs = _neutral_runs(fa)
    per_run = []
    for lo, hi in runs:
        clamp = _clamp_fn(fa[lo], dual)
        seg = [clamp(x) for x in fp[lo:hi]]
        per_run.append([(lo, seg, list(w)) for w in multiset_permutations(seg)])
    for combo in product(*per_run):
        u_frame = list(identity_perm(k))
        for lo, seg, w in combo:
            sub = stable_shortest_perm(seg, w)
            for off in range(len(seg)):
                u_frame[lo + off] = lo + sub[off]
        yield tuple(u_frame)


def _block_choice_perms(tau: Filling, r: int, dual: bool) -> Iterator[tuple[int, ...]]:
    """In-frame permutations of the sortable block that keep its kind."""
    k = tau.width
    frame_kind = "dagger" if dual else "diamond"
    a = _uppers(tau, r)
    p = tau.row(r)
    pi = sort_perm(a, p, frame_kind)
    inv = invert_perm(pi)
    if dual:
        block = [j for j in range(k) if a[inv[j]] > p[inv[j]]]
    else:
        block = [j for j in range(k) if a[inv[j]] <= p[inv[j]]]
    uppers = [a[inv[j]] for j in block]
    entries = [p[inv[j]] for j in block]
    for w in multiset_permutations(entries):
        if dual:
            if any(w[i] >= uppers[i] for i in range(len(w))):
                continue
        elif any(w[i] < uppers[i] for i in range(len(w))):
            continue
        sub = stable_shortest_perm(entries, list(w))
        v_frame = list(identity_perm(k))
        for off, j in enumerate(block):
            v_frame[j] = block[sub[off]]
        yield tuple(v_frame)


def _family_rect(sigma: Filling, dual: bool) -> list[Filling]:
    frame_kind = "dagger" if dual else "diamond"
    current = [sigma]
    for r in range(1, sigma.height + 1):
        new: list[Filling] = []
        for tau in current:
            for u_frame in _neutral_choice_perms(tau, r, dual):
                tau_u = conjugated_word_action(tau, u_frame, r, "bullet")
                for v_frame in _block_choice_perms(tau_u, r, dual):
                    new.append(
                        conjugated_word_action(tau_u, v_frame, r, frame_kind)
                    )
        current = new
    if len(set(current)) != len(current):
        raise AssertionError("family generation produced duplicates")
    return current


def generate_family(sigma: Filling, mode: str = "canonical") -> Iterator[Filling]:
    """All fillings generated from a (dual) canonical one by block moves."""
    dual = _check_mode(mode)
    if not is_canonical(sigma, mode):
        raise ValueError("input is not canonical for the requested mode")
    rect_families = [
        _family_rect(rect, dual) for _h, _c0, rect in rect_decompose(sigma)
    ]
    for combo in product(*rect_families):
        yield join_rects(combo)


# ---------------------------------------------------------------------------
# letter-count sequences and the t-binomial coefficients


def _nu_row(row, alphabet: int, dual: bool) -> tuple[int, ...]:
    """Cumulative letter counts of one row, largest letters first (smallest
    first in dual mode)."""
    counts = [0] * (alphabet + 1)
    for x in row:
        counts[x] += 1
    out = []
    acc = 0
    letters = range(alphabet, 0, -1) if not dual else range(1, alphabet + 1)
    for letter in letters:
        acc += counts[letter]
        out.append(acc)
    return tuple(out)


def _s_grid(upper_row, lower_row, alphabet: int, dual: bool) -> dict[tuple[int, int], int]:
    """Column-type counts s[(sup, sub)] for one row pair.

    Primal: s[k, m] counts columns whose upper entry is N+1-k and whose
    lower entry is at least N+1-m (sup 1..N-1 plus the forced sub N).
    Dual: s[k, m] counts columns with upper k+1 and lower at most m
    (sup 0..N-1).
    """
    N = alphabet
    grid: dict[tuple[int, int], int] = {}
    sups = range(1, N) if not dual else range(0, N)
    for k in sups:
        target = N + 1 - k if not dual else k + 1
        for m in range(k, N + 1):
            if not dual:
                grid[(k, m)] = sum(
                    1
                    for a, b in zip(upper_row, lower_row)
                    if a == target and b >= N + 1 - m
                )
            else:
                grid[(k, m)] = sum(
                    1 for a, b in zip(upper_row, lower_row) if a == target and b <= m
                )
    return grid


def _grid_sum(grid, sub: int, sup_from: int, sup_to: int) -> int:
    return sum(grid.get((k, sub), 0) for k in range(sup_from, sup_to + 1))


def nu_s_from_canonical(rect: Filling, alphabet: int, mode: str = "canonical"):
    """Letter-count data (nu per row, s per row pair) of a canonical rectangle.

    The s grid attached to row i describes the pair (i, i+1); the top row is
    paired with the virtual zero row, whose grid is identically zero.
    """
    dual = _check_mode(mode)
    if not rect.is_rectangle():
        raise ValueError("expected a rectangular filling")
    if not _is_canonical_rect(rect, dual):
        raise ValueError("expected a canonical rectangle for the requested mode")
    h = rect.height
    nus = [_nu_row(rect.row(i), alphabet, dual) for i in range(1, h + 1)]
    grids = []
    for i in range(1, h + 1):
        upper = rect.row(i + 1) if i < h else (0,) * rect.width
        grids.append(_s_grid(upper, rect.row(i), alphabet, dual))
    return nus, grids


def _rowpair_binomials(nu_i, grid, alphabet: int, dual: bool) -> QtPoly:
    """The t-binomial product attached to one row pair.

    nu_i[k-1] holds the cumulative count through the k-th letter class, so
    the pair (nu^{k+1}, nu^k) reads as (nu_i[k], nu_i[k-1]).
    """
    N = alphabet
    low = 1 if not dual else 0
    out = QtPoly.one()
    for k in range(low, N):
        top = nu_i[k] - _grid_sum(grid, k + 1, low, k)
        bot = (nu_i[k - 1] if k >= 1 else 0) - _grid_sum(grid, k, low, k)
        if top < 0:
            return QtPoly.zero()
        out = out * t_binomial(top, bot)
        if not out:
            return out
        for hh in range(low, k + 1):
            out = out * t_binomial(grid.get((hh, k + 1), 0), grid.get((hh, k), 0))
            if not out:
                return out
    return out


def d_coeff(f: Filling, mode: str = "canonical", alphabet: int | None = None) -> QtPoly:
    """Product of t-binomials weighting a (dual) canonical filling.

    Equals the generating function of the statistic offsets over the
    filling's family; independent of the ambient alphabet.
    """
    dual = _check_mode(mode)
    if not is_canonical(f, mode):
        raise ValueError("input is not canonical for the requested mode")
    N = f.max_entry() if alphabet is None else alphabet
    if N < f.max_entry():
        raise ValueError("alphabet smaller than the largest entry")
    out = QtPoly.one()
    for _h, _c0, rect in rect_decompose(f):
        nus, grids = nu_s_from_canonical(rect, N, mode)
        for i in range(rect.height):
            out = out * _rowpair_binomials(nus[i], grids[i], N, dual)
    return out


class InfeasibleNuS(ValueError):
    """Raised when a (nu, s) pair does not describe any canonical rectangle."""


def sigma_from_nu_s(nus, grids, alphabet: int, mode: str = "canonical") -> Filling:
    """Rebuild the canonical rectangle with the given letter-count data.

    ``nus[i]`` is the cumulative count sequence of row i+1 (bottom first) and
    ``grids[i]`` the column-type grid of the pair (i+1, i+2).  Raises
    InfeasibleNuS when the data is inconsistent.
    """
    dual = _check_mode(mode)
    N = alphabet
    h = len(nus)
    width = nus[0][-1]
    if any(nu[-1] != width for nu in nus):
        raise InfeasibleNuS("rows disagree on the rectangle width")

    def letters_of(nu):
        # letter value for each multiplicity slot k = 1..N
        out = []
        prev = 0
        for k in range(1, N + 1):
            m = nu[k - 1] - prev
            prev = nu[k - 1]
            letter = N + 1 - k if not dual else k
            out.extend([letter] * m)
        return out

    rows: list[list[int]] = [[0] * width for _ in range(h)]
    rows[h - 1] = sorted(letters_of(nus[h - 1]), reverse=True)
    for i in range(h - 1, 0, -1):
        upper = rows[i]
        grid = grids[i - 1]
        row = [0] * width
        used = [False] * width
        # first round: the confined entries under each upper letter; they
        # occupy the leftmost slots (rightmost in dual mode), weakly
        # decreasing left to right
        for k in (range(1, N) if not dual else range(0, N)):
            target = N + 1 - k if not dual else k + 1
            slots = [c for c in range(width) if upper[c] == target]
            vals: list[int] = []
            for m in range(k + 1, N + 1):
                mult = grid.get((k, m), 0) - grid.get((k, m - 1), 0)
                if mult < 0:
                    raise InfeasibleNuS("decreasing column-type chain")
                letter = N - m + 1 if not dual else m
                vals.extend([letter] * mult)
            if len(vals) > len(slots):
                raise InfeasibleNuS("more confined entries than columns")
            vals.sort(reverse=True)
            fill_slots = slots[: len(vals)] if not dual else slots[len(slots) - len(vals) :]
            for c, v in zip(fill_slots, vals):
                row[c] = v
                used[c] = True
        # second round: the remaining letters of the row, the m-th largest
        # into the empty slot with the m-th largest upper neighbour
        pool: dict[int, int] = {}
        for x in letters_of(nus[i - 1]):
            pool[x] = pool.get(x, 0) + 1
        for c in range(width):
            if used[c]:
                pool[row[c]] = pool.get(row[c], 0) - 1
                if pool[row[c]] < 0:
                    raise InfeasibleNuS("row counts cannot cover the confined entries")
        remaining = [x for x, cnt in sorted(pool.items(), reverse=True) for _ in range(cnt)]
        empty = sorted(
            (c for c in range(width) if not used[c]), key=lambda c: (-upper[c], c)
        )
        if len(empty) != len(remaining):
            raise InfeasibleNuS("slot/letter count mismatch")
        for c, v in zip(empty, remaining):
            ok = (v >= upper[c]) if not dual else (v < upper[c])
            if not ok:
                raise InfeasibleNuS("second-round entry breaks the column type")
            row[c] = v
        rows[i - 1] = row
    out = Filling(rows)
    if not _is_canonical_rect(out, dual):
        raise InfeasibleNuS("reconstruction is not canonical")
    return out


def compact_htilde(lam, alphabet: int, mode: str, stat: EtaStatistic) -> MonomialSym:
    """The compact sum over (dual) canonical fillings, in the monomial basis.

    Only the proved (mode, statistic) pairs are accepted.
    """
    _check_mode(mode)
    if not is_admissible(mode, stat):
        raise ValueError(f"({mode}, {stat.name}) is not an admissible pair")
    from .diagrams import complement_flip

    acc: dict[tuple[int, ...], QtPoly] = {}
    for f in enumerate_fillings(lam, alphabet):
        if not is_canonical(f, mode):
            continue
        d = d_coeff(f, mode, alphabet)
        rep = complement_flip(f, alphabet) if stat.dual else f
        weight = d.shift(q=maj(rep), t=eta(rep, stat, alphabet))
        key = rep.content(alphabet)
        acc[key] = acc.get(key, QtPoly.zero()) + weight
    out = MonomialSym()
    for content, poly in acc.items():
        if all(content[i] >= content[i + 1] for i in range(len(content) - 1)):
            out.add_term(tuple(x for x in content if x), poly)
    return out
