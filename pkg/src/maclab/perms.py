"""Permutation and multiset-rearrangement helpers.

Permutations are tuples ``pi`` of length k with 0-based entries: position i
of the source lands at position ``pi[i]`` of the result.  Adjacent-swap
indices in reduced words are 1-based (swap positions i, i+1), matching the
1-based column indices used on fillings.
"""

from __future__ import annotations

from collections import defaultdict, deque


def identity_perm(k: int) -> tuple[int, ...]:
    return tuple(range(k))


def apply_perm(pi, seq):
    out = [None] * len(seq)
    for i, x in enumerate(seq):
        out[pi[i]] = x
    return tuple(out)


def invert_perm(pi) -> tuple[int, ...]:
    out = [0] * len(pi)
    for i, j in enumerate(pi):
        out[j] = i
    return tuple(out)


def compose(pi, rho):
    """pi after rho: (pi . rho)(i) = pi[rho[i]]."""
    return tuple(pi[rho[i]] for i in range(len(rho)))


def inversions(pi) -> int:
    return sum(
        1 for i in range(len(pi)) for j in range(i + 1, len(pi)) if pi[i] > pi[j]
    )


def reduced_word(pi) -> list[int]:
    """A reduced word for pi as 1-based adjacent swaps in application order.

    Applying the swaps left to right to a sequence realizes apply_perm(pi, .).
    """
    v = list(invert_perm(pi))  # v[j] = source index landing at j
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(v) - 1):
            if v[i] > v[i + 1]:
                v[i], v[i + 1] = v[i + 1], v[i]
                word.append(i + 1)
                changed = True
    word.reverse()
    return word


def stable_shortest_perm(p, w) -> tuple[int, ...]:
    """Shortest permutation taking sequence p to sequence w.

    Equal entries keep their relative order, which makes the permutation
    unique of minimal length.  Raises if w is not a rearrangement of p.
    """
    buckets: dict = defaultdict(deque)
    for j, x in enumerate(w):
        buckets[x].append(j)
    try:
        return tuple(buckets[x].popleft() for x in p)
    except (KeyError, IndexError):
        raise ValueError(f"{w} is not a rearrangement of {p}") from None


def multiset_permutations(seq):
    """Distinct rearrangements of seq in lexicographic order, as tuples."""
    cur = sorted(seq)
    n = len(cur)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(cur)
        i = n - 2
        while i >= 0 and cur[i] >= cur[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while cur[j] <= cur[i]:
            j -= 1
        cur[i], cur[j] = cur[j], cur[i]
        cur[i + 1 :] = reversed(cur[i + 1 :])


def prec_inv(word, order) -> int:
    """Inversions of a word with respect to an explicit total order.

    ``order`` lists the letters from smallest to largest.
    """
    rank = {x: r for r, x in enumerate(order)}
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if rank[word[i]] > rank[word[j]]
    )


def rotated_down_order(u: int, n: int) -> list[int]:
    """The total order with u smallest: u < u-1 < ... < 1 < n < ... < u+1."""
    return list(range(u, 0, -1)) + list(range(n, u, -1))
