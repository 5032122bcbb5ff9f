"""Monomial expansions of the modified Macdonald polynomial.

The building blocks are finite sums over bounded monotone chains; they are
computed once per (nu, nu_tilde) pair as polynomials in an abstract chain
variable z and in t, then specialised to the four formulas' q,t-monomials.
Formulas 3 and 4 run through Laurent territory and are pushed back into
N[q,t] by an asserted global shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .diagrams import check_partition, conjugate, n_stat, partitions
from .qt import MonomialSym, QtPoly, t_binomial


@dataclass(frozen=True)
class NuSystem:
    """A family of weakly increasing letter-count sequences nu[i, j].

    Entries exist for 1 <= i <= j <= n; nu[j+1, j] reads as all zeros and
    level 0 of any sequence reads as 0.
    """

    n: int
    levels: int
    seqs: dict  # (i, j) -> tuple of length `levels`

    def get(self, i: int, j: int, k: int) -> int:
        if k <= 0:
            return 0
        if i == j + 1:
            return 0
        return self.seqs[(i, j)][k - 1]

    def seq(self, i: int, j: int) -> tuple[int, ...]:
        if i == j + 1:
            return (0,) * self.levels
        return self.seqs[(i, j)]


def enumerate_nu_systems(lam, mu) -> Iterator[NuSystem]:
    """All count systems compatible with the shape lam and the weight mu."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("shape and weight have different sizes")
    n = len(lam)
    N = len(mu)
    cells = [(i, j) for j in range(1, n + 1) for i in range(1, j + 1)]
    caps = {
        (i, j): lam[j - 1] - (lam[j] if j < n else 0) for (i, j) in cells
    }
    targets = [sum(mu[:k]) for k in range(1, N + 1)]

    def monotone_seqs(cap: int):
        out = []
        for seq in product(range(cap + 1), repeat=N):
            if all(seq[a] <= seq[a + 1] for a in range(N - 1)) and seq[-1] == cap:
                out.append(seq)
        return out

    options = {cell: monotone_seqs(caps[cell]) for cell in cells}

    def walk(idx: int, sums: tuple[int, ...], chosen: dict):
        if idx == len(cells):
            if list(sums) == targets:
                yield NuSystem(n, N, dict(chosen))
            return
        cell = cells[idx]
        rest_cap = sum(caps[cells[a]] for a in range(idx + 1, len(cells)))
        for seq in options[cell]:
            new = tuple(s + x for s, x in zip(sums, seq))
            if any(new[k] > targets[k] for k in range(N)):
                continue
            if any(new[k] + rest_cap < targets[k] for k in range(N)):
                continue
            chosen[cell] = seq
            yield from walk(idx + 1, new, chosen)
            del chosen[cell]

    yield from walk(0, (0,) * N, {})


def _chains(start_floor: int, length: int, end: int):
    """Weakly increasing nonnegative chains of `length` values ending at end."""
    if length == 1:
        yield (end,)
        return
    for seq in product(range(end + 1), repeat=length - 1):
        ok = all(seq[a] <= seq[a + 1] for a in range(length - 2))
        if ok and (length < 2 or seq[-1] <= end) and seq[0] >= start_floor:
            yield seq + (end,)


@lru_cache(maxsize=None)
def _phi_table(nu: tuple, nu_tilde: tuple, small: bool) -> tuple:
    """The chain sum as a sparse {(z_exp, t_exp): coeff} table.

    For the large variant the chain for letter class k ends at
    nu^k - nu^{k-1} and the exponent weight is xi_1; the small variant
    shifts the classes down by one, ends chains at nu^{k+1} - nu^k and uses
    xi_0.
    """
    N = len(nu)
    low = 0 if small else 1
    sups = list(range(low, N))

    def nu_at(seq, k):
        return seq[k - 1] if k >= 1 else 0

    chain_sets = []
    for k in sups:
        end = (nu_at(nu, k + 1) - nu_at(nu, k)) if small else (
            nu_at(nu, k) - nu_at(nu, k - 1)
        )
        if end < 0:
            raise ValueError("count sequence is not weakly increasing")
        chains = list(_chains(0, N - k + 1, end))
        if small and k == 0:
            # the bottom chain is pinned to start at zero
            chains = [c for c in chains if c[0] == 0]
        chain_sets.append(chains)

    table: dict[tuple[int, int], int] = {}
    for combo in product(*chain_sets):
        # s[(sup, sub)] with sub running sup..N
        s = {}
        for k, chain in zip(sups, combo):
            for off, val in enumerate(chain):
                s[(k, k + off)] = val

        def ssum(sub, lo, hi):
            return sum(s[(a, sub)] for a in range(lo, hi + 1) if (a, sub) in s)

        xi = 0
        for i in sups:
            for k in range(i, N):
                xi += (s[(i, k + 1)] - s[(i, k)]) * (nu_at(nu_tilde, k) - ssum(k, i, k))
        z_exp = 0
        poly = QtPoly.monomial(1, 0, xi)
        for k in sups:
            z_exp += s[(k, N)] - s[(k, k)]
            top = nu_at(nu_tilde, k + 1) - ssum(k + 1, low, k)
            bot = nu_at(nu_tilde, k) - ssum(k, low, k)
            if top < 0:
                poly = QtPoly.zero()
                break
            poly = poly * t_binomial(top, bot)
            if not poly:
                break
            for i in range(low, k + 1):
                poly = poly * t_binomial(s[(i, k + 1)], s[(i, k)])
                if not poly:
                    break
            if not poly:
                break
        if not poly:
            continue
        for (qe, te), c in poly.terms.items():
            key = (z_exp, te)
            table[key] = table.get(key, 0) + c
            if not table[key]:
                del table[key]
    return tuple(sorted(table.items()))


def _specialize(table, z_q: int, z_t: int, t_inverse: bool) -> QtPoly:
    terms = {}
    for (z_exp, t_exp), c in table:
        te = -t_exp if t_inverse else t_exp
        key = (z_q * z_exp, z_t * z_exp + te)
        terms[key] = terms.get(key, 0) + c
    return QtPoly(terms)


def phi_big(nu, nu_tilde, z_q: int = 0, z_t: int = 0, t_inverse: bool = False) -> QtPoly:
    """The large chain sum, specialised at z = q^z_q t^z_t."""
    return _specialize(_phi_table(tuple(nu), tuple(nu_tilde), False), z_q, z_t, t_inverse)


def phi_small(nu, nu_tilde, z_q: int = 0, z_t: int = 0, t_inverse: bool = False) -> QtPoly:
    """The small chain sum, specialised at z = q^z_q t^z_t."""
    return _specialize(_phi_table(tuple(nu), tuple(nu_tilde), True), z_q, z_t, t_inverse)


def chi(system: NuSystem, variant: int) -> int:
    """The exponent corrections attached to a count system."""
    if variant not in (1, 2, 3, 4):
        raise ValueError("variant must be 1..4")
    n, N = system.n, system.levels
    g = system.get
    total = 0
    for k in range(1, N + 1):
        for j in range(1, n + 1):
            for i in range(1, j + 1):
                d = g(i, j, k) - g(i, j, k - 1)
                if variant in (1, 2):
                    total += d * (d - 1) // 2
                for ell in range(j + 1, n + 1):
                    if variant == 1:
                        total += d * (g(i, ell, k) - g(i + 1, ell, k - 1))
                    elif variant == 2:
                        total += d * (
                            g(ell - j + i, ell, k) - g(ell - j + i + 1, ell, k - 1)
                        )
                    elif variant == 3:
                        total += d * (g(i, ell, k - 1) - g(i + 1, ell, k))
                    else:
                        total += d * (
                            g(ell - j + i, ell, k - 1) - g(ell - j + i + 1, ell, k)
                        )
    return total


def p_summand(lam, system: NuSystem, formula: int) -> QtPoly:
    """One count system's contribution to the weight-coefficient polynomial."""
    lam = tuple(lam)
    n = len(lam)
    term = QtPoly.one()
    for j in range(1, n + 1):
        for i in range(1, j + 1):
            nu = system.seq(i + 1, j)
            nut = system.seq(i, j)
            if formula == 1:
                term = term * phi_big(nu, nut, j - i, lam[i - 1] - lam[j - 1])
            elif formula == 2:
                term = term * phi_big(nu, nut, i, lam[j - i] - lam[j - 1])
            elif formula == 3:
                term = term * phi_small(nu, nut, i - j, lam[j - 1] - lam[i - 1], True)
            else:
                term = term * phi_small(nu, nut, -i, lam[j - 1] - lam[j - i], True)
            if not term:
                return term
    if formula == 1:
        return term.shift(t=chi(system, 1))
    if formula == 2:
        return term.shift(t=chi(system, 2))
    shift_t = n_stat(conjugate(lam)) - chi(system, formula)
    return term.shift(q=n_stat(lam), t=shift_t)


def P_lambda_mu(lam, mu, formula: int = 1) -> QtPoly:
    """The weight-mu coefficient polynomial, by any of the four formulas."""
    if formula not in (1, 2, 3, 4):
        raise ValueError("formula must be 1..4")
    lam = check_partition(lam)
    mu = check_partition(mu)
    total = QtPoly.zero()
    for system in enumerate_nu_systems(lam, mu):
        total = total + p_summand(lam, system, formula)
    if not total.is_positive_normal():
        raise AssertionError(
            f"formula {formula} left negative exponents or coefficients: {total}"
        )
    return total


def Htilde_monomial(lam, max_weight_parts: int | None = None) -> MonomialSym:
    """The full monomial expansion, through the first formula.

    Coefficients are listed for all partitions of |lam| with at most
    max_weight_parts parts (all of them by default).
    """
    lam = check_partition(lam)
    size = sum(lam)
    cap = size if max_weight_parts is None else max_weight_parts
    shift = n_stat(conjugate(lam))
    out = MonomialSym()
    for mu in partitions(size):
        if len(mu) > cap:
            continue
        poly = P_lambda_mu(lam, mu, 1).substitute_t_inverse().shift(t=shift)
        if not poly.is_positive_normal():
            raise AssertionError(f"coefficient of m{mu} fell outside N[q,t]")
        out.add_term(mu, poly)
    return out
